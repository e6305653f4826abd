#pragma once

#include "lw/partition.hpp"
#include "lw/poly.hpp"

namespace lw {

/// Shifted symmetric function p_k(lambda), k = 0..6:
/// p_0 = 1, p_k = sum_i ((lambda_i - i + 1/2)^(k-1) - (-i + 1/2)^(k-1)).
BigRat pk(const Partition& lam, int k);

/// Eigenvalues of the first three quantum KdV hamiltonians at c = -2, as
/// polynomials in beta with rational coefficients.
struct QkdvEigen {
    RatPoly I1, I3, I5;
};
QkdvEigen qkdv_eigenvalues(const Partition& lam);

/// Sum of the roots of P_lambda: 2 p4 - 2 p2^2 + 3 beta p3 + beta^2 p2 + p2/2.
RatPoly root_sum(const Partition& lam);

/// Sum of squared roots of P_lambda.  CONJECTURAL: printed closed form that
/// has been verified numerically but not proved; callers must flag results.
RatPoly root_sum_sq(const Partition& lam);

}  // namespace lw
