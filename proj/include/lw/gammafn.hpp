#pragma once

#include <cmath>
#include <complex>

namespace lw {

/* Lanczos approximation (g = 7, 9 terms), relative error ~1e-13 on the half
 * plane Re z > 0.5; extended by the reflection formula elsewhere.
 */
namespace detail {
inline constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

inline std::complex<double> lanczos_sum(std::complex<double> z) {
    std::complex<double> a(kLanczos[0], 0.0);
    for (int k = 1; k < 9; ++k) a += kLanczos[k] / (z + static_cast<double>(k - 1));
    return a;
}
}  // namespace detail

inline std::complex<double> gamma_complex(std::complex<double> z) {
    constexpr double pi = 3.14159265358979323846;
    if (z.real() < 0.5) {
        // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        return pi / (std::sin(pi * z) * gamma_complex(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> a = detail::lanczos_sum(z + 1.0);
    std::complex<double> t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

/// Entire reciprocal 1/Gamma(z); vanishes at z = 0, -1, -2, ...
inline std::complex<double> rec_gamma(std::complex<double> z) {
    constexpr double pi = 3.14159265358979323846;
    if (z.real() < 0.5) return std::sin(pi * z) * gamma_complex(1.0 - z) / pi;
    return 1.0 / gamma_complex(z);
}

inline double gamma_real(double x) { return gamma_complex({x, 0.0}).real(); }

}  // namespace lw
