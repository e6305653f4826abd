#pragma once

#include <map>
#include <string>
#include <vector>

#include "lw/partition.hpp"
#include "lw/poly.hpp"

namespace lw {

/* Truncated free-field Fock space: the polynomial algebra C[q_1..q_N] graded
 * by deg q_n = n, cut at total degree <= N.  All operators implemented here
 * are grade-preserving or grade-shifting mode monomials, so the truncation is
 * exact on the blocks the checks run on.
 */
class FockSpace {
public:
    explicit FockSpace(int N);

    int truncation() const { return N_; }
    int dim() const { return static_cast<int>(monos_.size()); }
    int degree_of(int idx) const { return degrees_[static_cast<size_t>(idx)]; }
    const std::vector<int>& exponents(int idx) const { return monos_[static_cast<size_t>(idx)]; }
    int index_of(const std::vector<int>& expo) const;  // -1 when outside the truncation
    const std::vector<int>& degree_block(int n) const { return blocks_[static_cast<size_t>(n)]; }

private:
    int N_;
    std::vector<std::vector<int>> monos_;   // exponent of q_{i+1} at slot i
    std::vector<int> degrees_;
    std::vector<std::vector<int>> blocks_;  // indices per degree
    std::map<std::vector<int>, int> index_;
};

/// Element of the truncated Fock space; coefficients are polynomials in beta
/// over Q (rational beta is the degree-zero case).
struct FockVector {
    const FockSpace* space = nullptr;
    std::vector<RatPoly> coef;

    explicit FockVector(const FockSpace& sp)
        : space(&sp), coef(static_cast<size_t>(sp.dim())) {}
    bool is_zero() const;
    friend FockVector operator+(FockVector a, const FockVector& b);
    friend FockVector operator-(FockVector a, const FockVector& b);
    FockVector scaled(const RatPoly& s) const;
};

FockVector fock_one(const FockSpace& sp);
FockVector fock_basis(const FockSpace& sp, int idx);
FockVector fock_mul(const FockVector& a, const FockVector& b);

/// Schur function s_lambda via Jacobi-Trudi in the variables q (power sums).
FockVector schur_vector(const FockSpace& sp, const Partition& lam);

/// Free boson mode: a < 0 multiplies by q_{-a}, a > 0 acts as a d/dq_a.
FockVector apply_mode(long a, const FockVector& v);

/// rho_beta(L_m) with beta symbolic, modes truncated to |a| <= N.
FockVector apply_virasoro(long m, const FockVector& v);

/// rho_beta(I_k) for k in {1,3,5} as the printed normally ordered mode sums.
FockVector apply_i_operator(int k, const FockVector& v);

/* A normally ordered differential polynomial in u = u_0, u_1, u_2 with
 * coefficients in Q[beta]; applied as res_z : expr : dz/z.  The z^{-a}
 * mode of u_l is a^l times the free boson mode (signed a), i.e.
 * a^{l+1} d/dq_a for a > 0 and (-1)^l n^l q_n for a = -n < 0.
 */
struct UTerm {
    RatPoly coeff;
    std::vector<int> ls;  // one entry per u-factor: 0, 1 or 2
};
using UExpr = std::vector<UTerm>;

FockVector apply_residue(const UExpr& expr, const FockVector& v);

/// Grade-preserving operator as a column-sparse matrix over Q[beta].
struct FockOp {
    const FockSpace* space = nullptr;
    std::vector<std::vector<std::pair<int, RatPoly>>> cols;

    FockVector apply(const FockVector& v) const;
    bool operator==(const FockOp& o) const { return cols == o.cols; }
};

FockOp residue_matrix(const FockSpace& sp, const UExpr& expr);
FockOp i_operator_matrix(const FockSpace& sp, int k);

UExpr a_operator_expr(int k);        // A_2 .. A_6 (A_1 is the zero expression)
UExpr i_expr_printed(int k);         // differential polynomials as printed
UExpr i_expr_corrected(int k);       // with the beta^2 bracket halved (see report)

struct IdentityReport {
    bool corrected_match[3] = {false, false, false};  // I1, I3, I5
    bool printed_match[3] = {false, false, false};
    std::string note;
};

/// Builds rho(I_k) from the Virasoro mode sums and from the differential
/// polynomials and compares the matrices blockwise; also asserts that each
/// I_k equals the matching polynomial combination of A_2..A_6.
IdentityReport hamiltonian_identity_check(int N);

}  // namespace lw
