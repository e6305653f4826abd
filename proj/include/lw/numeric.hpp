#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "lw/partition.hpp"
#include "lw/poly.hpp"

namespace lw {

struct NumericFailure : std::runtime_error {
    explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateRoots : std::domain_error {
    explicit DegenerateRoots(const std::string& what) : std::domain_error(what) {}
};

struct RootSet {
    std::vector<std::complex<double>> roots;
    std::vector<double> residuals;  // |P(root)| / max|coeff|
    int degree = 0;
};

/// All complex roots of a monic polynomial with rational coefficients, by
/// Aberth-Ehrlich simultaneous iteration (deterministic start, max 500
/// iterations, relative tolerance 1e-12 by default).
RootSet poly_roots(const RatPoly& monic, double tol = 1e-12);

/// Max residual of the BLZ system at the points z (pairwise distinct):
///   sum_{j != k} z_k (z_k^2 + 12 z_k z_j + 3 z_j^2)/(z_k - z_j)^3
///     - z_k/8 + (beta^2 - 1)/8.
double blz_residual(const std::vector<std::complex<double>>& z, const BigRat& beta);

/// Max residual of the Calogero-Moser equilibrium condition at x (distinct,
/// nonzero): -x_k + (beta^2 - 1/4)/x_k^3 + sum_{j != k} 2/(x_k - x_j)^3.
double calogero_residual(const std::vector<std::complex<double>>& x, const BigRat& beta);

struct NewtonReport {
    std::complex<double> sum_numeric, sumsq_numeric;
    double sum_exact = 0;          // root_sum evaluated at beta
    double sum_from_I = 0;         // 2 I3 - 2 I1^2
    double sumsq_conjectural = 0;  // root_sum_sq evaluated at beta (conjectural)
    double sumsq_from_I = 0;       // 56/3 I5 - 40 I3 I1 + 64/3 I1^3 + 12 I3 - 12 I1^2
    double err_sum = 0, err_sum_from_I = 0;
    double err_sumsq_conjectural = 0, err_sumsq_from_I = 0;
};

/// Compares numeric power sums of the roots of P_lambda at beta with the
/// shifted-symmetric closed forms and the I-combinations.
NewtonReport newton_check(const Partition& lam, const BigRat& beta);

}  // namespace lw
