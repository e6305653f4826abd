#include "lw/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lw/gammafn.hpp"
#include "lw/wronskian.hpp"

namespace lw {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_integer(const BigRat& x) { return x.get_den() == 1; }
long as_long(const BigRat& x) { return mpz_get_si(mpq_numref(x.get_mpq_t())); }
double as_double(const BigRat& x) { return x.get_d(); }

/* Prefactor Gamma(1+beta-c) Gamma(-beta+c) / Gamma(-beta) with the removable
 * integer-beta singularities evaluated as limits:
 *   c >= 0:  Gamma(1+beta-c) * (-beta)_c, which at beta = k in {0..c-1}
 *            degenerates to (-1)^c k!.
 *   c <  0:  Gamma(1+beta+|c|) / prod_{t=1..|c|} (-beta-t).
 */
double pair_prefactor(const BigRat& beta, long c) {
    const double b = as_double(beta);
    if (c >= 0) {
        if (is_integer(beta)) {
            long k = as_long(beta);
            if (k >= 0 && k < c) {
                double fact = 1.0;
                for (long t = 2; t <= k; ++t) fact *= static_cast<double>(t);
                return (c % 2 == 0 ? 1.0 : -1.0) * fact;
            }
        }
        double poch = 1.0;
        for (long t = 0; t < c; ++t) poch *= (-b + static_cast<double>(t));
        return gamma_real(1.0 + b - static_cast<double>(c)) * poch;
    }
    double den = 1.0;
    for (long t = 1; t <= -c; ++t) den *= (-b - static_cast<double>(t));
    return gamma_real(1.0 + b - static_cast<double>(c)) / den;
}

/* One factor of the theorem's closed form:
 *   recGamma(g + M) * prod_{t in [0..M-1] \ m} (g + t),
 * where m = lambda + delta_r and g = (1 +- beta)/2 - E/4 - (r or s).  This is
 * the pole-free rewriting of prod_k (E - E_k)^{-1} / Gamma(g): every pole
 * factor cancels an explicit zero of 1/Gamma, so spectrum zeros come out as
 * exact zeros of the linear factors.
 */
SpectralValue half_factor(const std::vector<long>& m, std::complex<double> g) {
    SpectralValue out;
    const long M = m.empty() ? 0 : m.front() + 1;
    std::set<long> in_m(m.begin(), m.end());
    std::complex<double> val = rec_gamma(g + static_cast<double>(M));
    bool zero = std::abs(val) == 0.0;
    for (long t = 0; t < M; ++t) {
        if (in_m.count(t)) continue;
        std::complex<double> f = g + static_cast<double>(t);
        if (std::abs(f) < 1e-11 * (1.0 + std::abs(g))) {
            zero = true;
            f = 0.0;
        }
        val *= f;
    }
    out.value = zero ? 0.0 : val;
    out.flag = zero ? SpecFlag::zero : SpecFlag::finite;
    return out;
}

SpectralValue q_eval_impl(const Partition& lam, const Partition& mu, int sign,
                          std::complex<double> E, const BigRat& beta, bool allow_integer) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    if (is_integer(beta)) {
        long k = as_long(beta);
        if (!allow_integer)
            throw MomentumExcluded("general-pair Q is only evaluated for non-integer beta");
        if ((sign == 1 && k < 0) || (sign == -1 && k > 0))
            throw MomentumExcluded("-sign*beta is a positive integer");
    }
    const int r = lam.length(), s = mu.length();
    const double b = as_double(beta);

    SpectralValue out;
    if (sign == 1) {
        std::vector<long> m = plus_staircase(lam, r);
        std::complex<double> g = (1.0 + b) / 2.0 - E / 4.0 - static_cast<double>(r);
        out = half_factor(m, g);
        out.value *= pair_prefactor(beta, r - s);
    } else {
        std::vector<long> n = plus_staircase(mu, s);
        std::complex<double> g = (1.0 - b) / 2.0 - E / 4.0 - static_cast<double>(s);
        out = half_factor(n, g);
        double pref = pair_prefactor(-beta, s - r);
        if ((r + s) % 2 != 0) pref = -pref;
        out.value *= pref;
    }
    if (std::abs(out.value) > 1e300) out.flag = SpecFlag::pole;
    return out;
}

}  // namespace

std::vector<BigRat> spectrum(const Partition& lam, int sign, const BigRat& beta, int kmax) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    if (is_integer(beta)) {
        long k = as_long(beta);
        if ((sign == 1 && k < 0) || (sign == -1 && k > 0))
            throw MomentumExcluded("-sign*beta is a positive integer");
    }
    const Partition& source = (sign == 1) ? conjugate(lam) : lam;
    std::vector<BigRat> out;
    out.reserve(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        long base = 4L * (k - source.part(k + 1)) + 2;
        out.push_back(BigRat(base) + BigRat(2 * sign) * beta);
    }
    return out;
}

SpectralValue q_eval(const Partition& lam, int sign, std::complex<double> E, const BigRat& beta) {
    return q_eval_impl(lam, conjugate(lam), sign, E, beta, /*allow_integer=*/true);
}

SpectralValue q_eval_pair(const Partition& lam, const Partition& mu, int sign,
                          std::complex<double> E, const BigRat& beta) {
    return q_eval_impl(lam, mu, sign, E, beta, /*allow_integer=*/false);
}

SpectralValue stokes_t_pair(const Partition& lam, const Partition& mu, std::complex<double> E,
                            const BigRat& beta) {
    const int r = lam.length(), s = mu.length();
    const double b = as_double(beta);
    std::vector<long> m = plus_staircase(lam, r), n = plus_staircase(mu, s);
    SpectralValue plus =
        half_factor(m, (1.0 + b) / 2.0 - E / 4.0 - static_cast<double>(r));
    SpectralValue minus =
        half_factor(n, (1.0 - b) / 2.0 - E / 4.0 - static_cast<double>(s));
    SpectralValue out;
    out.value = plus.value * minus.value;
    if ((r + s) % 2 != 0) out.value = -out.value;
    out.flag = (plus.flag == SpecFlag::zero || minus.flag == SpecFlag::zero) ? SpecFlag::zero
                                                                             : SpecFlag::finite;
    return out;
}

SpectralValue stokes_t(const Partition& lam, std::complex<double> E, const BigRat& beta) {
    return stokes_t_pair(lam, conjugate(lam), E, beta);
}

namespace {
std::complex<double> qq_bracket(const Partition& lam, const BigRat& beta,
                                std::complex<double> E) {
    if (is_integer(beta)) throw MomentumExcluded("QQ relations need non-integer beta");
    const std::complex<double> i(0.0, 1.0);
    const double b = as_double(beta);
    std::complex<double> qpp = q_eval(lam, +1, i * E, beta).value;
    std::complex<double> qmm = q_eval(lam, -1, -i * E, beta).value;
    std::complex<double> qpm = q_eval(lam, +1, -i * E, beta).value;
    std::complex<double> qmp = q_eval(lam, -1, i * E, beta).value;
    return std::exp(i * (b * kPi / 2.0)) * qpp * qmm - std::exp(-i * (b * kPi / 2.0)) * qpm * qmp;
}
}  // namespace

double qq_residual(const Partition& lam, const BigRat& beta, std::complex<double> E) {
    const std::complex<double> i(0.0, 1.0);
    const double b = as_double(beta);
    // Sign carried by the theorem's printed Q_- prefactor: with that
    // normalization the bracket equals (-1)^{l(lam)+lam_1} i beta e^{E pi/4}.
    double sign = ((lam.length() + lam.part(1)) % 2 == 0) ? 1.0 : -1.0;
    return std::abs(qq_bracket(lam, beta, E) - sign * i * b * std::exp(E * kPi / 4.0));
}

double qq_residual_printed(const Partition& lam, const BigRat& beta, std::complex<double> E) {
    const std::complex<double> i(0.0, 1.0);
    return std::abs(qq_bracket(lam, beta, E) - i * std::exp(E * kPi / 4.0));
}

long count_blz(long n, const BigRat& beta) {
    long count = 0;
    for_each_partition(n, [&](const Partition& lam) {
        if (sgn(eval_at_rational(constant_term_hooks(lam, conjugate(lam)), beta)) != 0) ++count;
    });
    return count;
}

bool in_a_set(long n, const BigRat& beta) {
    if (!is_integer(beta)) return false;
    long k = std::labs(as_long(beta));
    for (long r = 1; r <= n; ++r)
        for (long s = 1; r * s <= n; ++s)
            if (std::labs(r - 2 * s) == k) return true;
    return false;
}

VermaReport verma_report(long n, const BigRat& beta) {
    VermaReport rep;
    rep.p_n = partition_count(n);
    rep.in_A_n = in_a_set(n, beta);
    rep.irreducible_in_degree = !rep.in_A_n;
    rep.blz_count = count_blz(n, beta);
    return rep;
}

}  // namespace lw
