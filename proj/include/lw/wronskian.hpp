#pragma once

#include <utility>
#include <vector>

#include "lw/partition.hpp"
#include "lw/poly.hpp"

namespace lw {

/// Element of V_r: strictly decreasing non-negative integers.
struct StrictVector {
    std::vector<long> v;

    StrictVector() = default;
    explicit StrictVector(std::vector<long> vv);
    static StrictVector from_partition(const Partition& p, int r);  // lambda + delta_r

    int size() const { return static_cast<int>(v.size()); }
    long sum() const;
    Partition to_partition() const;  // strip the staircase
};

/// kappa_{m,n} = Delta(2m+beta, 2n-beta)
///            = 2^C(r+s,2) Delta(m) Delta(n) prod (n_j - m_i - beta),
/// with Delta(v) = prod_{i<j} (v_j - v_i).
PolyB kappa(const StrictVector& m, const StrictVector& n);

/// The monic polynomial part of the Laguerre Wronskian, symbolically in beta.
/// Monic in y of degree |m|+|n| - C(r,2) - C(s,2); coefficient of y^k has
/// beta-degree <= d-k.
PolyYB phi_tilde(const StrictVector& m, const StrictVector& n);

/// Phi_{lambda,mu}(y) = phi_tilde(lambda+delta_r, mu+delta_s) with beta
/// shifted by s-r; independent of the padding r >= l(lambda), s >= l(mu).
PolyYB phi(const Partition& lam, const Partition& mu);
PolyYB phi_padded(const Partition& lam, const Partition& mu, int r, int s);

/// Constant term of Phi_{lambda,mu} as a product over odd hooks of the
/// partition with empty 2-core and 2-quotient (lambda, mu).
PolyB constant_term_hooks(const Partition& lam, const Partition& mu);

/// Staircase-core variant; independent of c.
PolyB constant_term_hooks_core(const Partition& lam, const Partition& mu, long c);

/// Constant term from the Pochhammer-quotient formula, evaluated in the
/// fraction field; throws if the result fails to be a polynomial.
PolyB constant_term_pochhammer(const StrictVector& m, const StrictVector& n);

/// The two printed closed forms for the coefficients of y^{d-1} and y^{d-2}.
/// first is valid for d >= 1, second for d >= 2 (domain_error otherwise).
std::pair<PolyB, PolyB> subleading(const StrictVector& m, const StrictVector& n);

/// P_lambda(z) with P_lambda(y^2) = Phi_{lambda,lambda'}(y); degree |lambda|.
PolyYB p_poly(const Partition& lam);

/// Independent Hermite-Wronskian route at beta = -1/2; true on agreement.
bool hermite_reduce_check(const StrictVector& m, const StrictVector& n);

/// Monic Hermite polynomial over Q (test oracle for the Hermite reduction).
RatPoly hermite_monic(long n);

}  // namespace lw
