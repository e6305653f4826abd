#pragma once

#include <set>
#include <utility>
#include <vector>

#include "lw/partition.hpp"
#include "lw/poly.hpp"

namespace lw {

/// A triple (beta, lambda, mu) with exact rational beta.  Coalescence can
/// only occur at integer beta; non-integer triples are always reduced.
struct Triple {
    BigRat beta;
    Partition lam, mu;

    bool operator==(const Triple& o) const {
        return beta == o.beta && lam == o.lam && mu == o.mu;
    }
};

struct CoalescenceEdge {
    Cell cell;      // cell of D^odd(Lambda) responsible for the vanishing root
    Triple target;  // (beta +- 2, 2-quotient of Lambda minus the strip)
};

/// True iff the constant term of Phi_{lambda,mu} does not vanish at beta.
bool is_reduced(const Triple& t);

/// All one-step coalescence moves out of t (empty iff t is reduced).
std::vector<CoalescenceEdge> coalescence_edges(const Triple& t);

/// Follow edges to the unique reduced representative.  The exponent is
/// |lambda|+|mu| - |lambda~|-|mu~|, the power of y split off of Phi.
std::pair<Triple, long> reduce(const Triple& t);

/// Integer roots of the symmetric-case constant term over all lambda of n,
/// by brute-force evaluation of the hook-product polynomial.
std::set<long> b_set(long n);

/// Closed form: odd |beta| <= 2n-1 together with even |beta| <= n-2.
std::set<long> c_set(long n);

}  // namespace lw
