#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "lw/partition.hpp"
#include "lw/poly.hpp"

namespace lw {

struct MomentumExcluded : std::domain_error {
    explicit MomentumExcluded(const std::string& what) : std::domain_error(what) {}
};

enum class SpecFlag { finite, pole, zero };

struct SpectralValue {
    std::complex<double> value{0.0, 0.0};
    SpecFlag flag = SpecFlag::finite;
};

/// The +/- spectrum of the rational extension attached to (lambda, lambda'):
/// {4(k - lambda'_{k+1}) + 2 + 2 beta} resp. the conjugate set with -beta.
/// sign is +1 or -1; requires -sign*beta not a positive integer.
std::vector<BigRat> spectrum(const Partition& lam, int sign, const BigRat& beta, int kmax);

/// Spectral determinant Q_+/- for the symmetric pair (lambda, lambda').
SpectralValue q_eval(const Partition& lam, int sign, std::complex<double> E, const BigRat& beta);

/// General-pair spectral determinant (beta must not be an integer).
SpectralValue q_eval_pair(const Partition& lam, const Partition& mu, int sign,
                          std::complex<double> E, const BigRat& beta);

/// Stokes multiplier; entire in E and beta.
SpectralValue stokes_t(const Partition& lam, std::complex<double> E, const BigRat& beta);
SpectralValue stokes_t_pair(const Partition& lam, const Partition& mu, std::complex<double> E,
                            const BigRat& beta);

/* QQ-relation residual at the free-fermion point:
 *   | e^{i beta pi/2} Q+(iE) Q-(-iE) - e^{-i beta pi/2} Q+(-iE) Q-(iE)
 *     - (-1)^{l(lam)+lam_1} i beta e^{E pi/4} |.
 * The right-hand side is the exact functional relation satisfied by the
 * theorem's printed closed forms for Q: relative to the relation as printed
 * it carries the factor beta (already forced by the harmonic oscillator,
 * via Euler reflection) and the sign of the Q_- prefactor.
 * qq_residual_printed reports the literal-normalization residual.
 */
double qq_residual(const Partition& lam, const BigRat& beta, std::complex<double> E);
double qq_residual_printed(const Partition& lam, const BigRat& beta, std::complex<double> E);

/// Number of level-n BLZ polynomials: partitions of n whose symmetric
/// constant term does not vanish at beta.
long count_blz(long n, const BigRat& beta);

struct VermaReport {
    long p_n = 0;
    bool in_A_n = false;              // degree-n subspace contains a singular vector
    bool irreducible_in_degree = false;
    long blz_count = 0;
};
VermaReport verma_report(long n, const BigRat& beta);

/// Brute-force A_n membership: exists r,s >= 1 with rs <= n and |beta| = |r-2s|.
bool in_a_set(long n, const BigRat& beta);

}  // namespace lw
