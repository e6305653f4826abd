#include "lw/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lw/shiftsym.hpp"
#include "lw/wronskian.hpp"

namespace lw {

namespace {
using cplx = std::complex<double>;

cplx horner(const std::vector<cplx>& c, cplx x) {
    cplx acc(0.0, 0.0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}
}  // namespace

RootSet poly_roots(const RatPoly& monic, double tol) {
    const int n = monic.degree();
    if (n < 1) throw std::invalid_argument("poly_roots: degree must be >= 1");
    if (monic.leading() != BigRat(1)) throw std::invalid_argument("poly_roots: not monic");

    std::vector<cplx> c(static_cast<size_t>(n) + 1);
    double maxc = 1.0;
    for (int k = 0; k <= n; ++k) {
        c[static_cast<size_t>(k)] = cplx(monic.coeff(k).get_d(), 0.0);
        maxc = std::max(maxc, std::abs(c[static_cast<size_t>(k)]));
    }
    std::vector<cplx> dc(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
        dc[static_cast<size_t>(k - 1)] = c[static_cast<size_t>(k)] * static_cast<double>(k);

    // deterministic start: Cauchy-bound circle with an irrational phase offset
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[static_cast<size_t>(k)]));
    radius = 1.0 + radius;
    std::vector<cplx> z(static_cast<size_t>(n));
    constexpr double kPi = 3.14159265358979323846;
    for (int k = 0; k < n; ++k) {
        double theta = 2.0 * kPi * k / n + 0.4;
        z[static_cast<size_t>(k)] = radius * cplx(std::cos(theta), std::sin(theta));
    }

    const int max_iter = 500;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        double step = 0.0;
        for (int k = 0; k < n; ++k) {
            cplx pk = horner(c, z[static_cast<size_t>(k)]);
            cplx dpk = horner(dc, z[static_cast<size_t>(k)]);
            if (std::abs(pk) == 0.0) continue;
            cplx w = pk / dpk;
            cplx s(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != k) s += 1.0 / (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
            cplx corr = w / (1.0 - w * s);
            z[static_cast<size_t>(k)] -= corr;
            step = std::max(step, std::abs(corr) / (1.0 + std::abs(z[static_cast<size_t>(k)])));
        }
        if (step < tol) break;
    }

    RootSet out;
    out.degree = n;
    out.roots = z;
    out.residuals.resize(static_cast<size_t>(n));
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        out.residuals[static_cast<size_t>(k)] = std::abs(horner(c, z[static_cast<size_t>(k)])) / maxc;
        worst = std::max(worst, out.residuals[static_cast<size_t>(k)]);
    }
    if (iter == max_iter && worst > 1e-8) {
        std::ostringstream os;
        os << "poly_roots did not converge after " << max_iter
           << " iterations; worst residual " << worst;
        throw NumericFailure(os.str());
    }
    std::sort(out.roots.begin(), out.roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

double blz_residual(const std::vector<cplx>& z, const BigRat& beta) {
    const size_t n = z.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) < 1e-8) throw DegenerateRoots("coincident BLZ roots");
    const double b = beta.get_d();
    double worst = 0.0;
    for (size_t k = 0; k < n; ++k) {
        cplx acc(0.0, 0.0);
        for (size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            cplx d = z[k] - z[j];
            acc += z[k] * (z[k] * z[k] + 12.0 * z[k] * z[j] + 3.0 * z[j] * z[j]) / (d * d * d);
        }
        acc += -z[k] / 8.0 + (b * b - 1.0) / 8.0;
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

double calogero_residual(const std::vector<cplx>& x, const BigRat& beta) {
    const size_t n = x.size();
    for (size_t i = 0; i < n; ++i) {
        if (std::abs(x[i]) < 1e-10) throw DegenerateRoots("root at the origin");
        for (size_t j = i + 1; j < n; ++j)
            if (std::abs(x[i] - x[j]) < 1e-8) throw DegenerateRoots("coincident poles");
    }
    const double b = beta.get_d();
    double worst = 0.0;
    for (size_t k = 0; k < n; ++k) {
        cplx acc = -x[k] + (b * b - 0.25) / (x[k] * x[k] * x[k]);
        for (size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            cplx d = x[k] - x[j];
            acc += 2.0 / (d * d * d);
        }
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

NewtonReport newton_check(const Partition& lam, const BigRat& beta) {
    NewtonReport rep;
    RatPoly p = eval_beta(p_poly(lam), beta);
    if (p.degree() >= 1) {
        RootSet rs = poly_roots(p);
        for (const auto& z : rs.roots) {
            rep.sum_numeric += z;
            rep.sumsq_numeric += z * z;
        }
    }
    rep.sum_exact = eval_at_rational(root_sum(lam), beta).get_d();
    rep.sumsq_conjectural = eval_at_rational(root_sum_sq(lam), beta).get_d();

    QkdvEigen e = qkdv_eigenvalues(lam);
    const BigRat i1 = eval_at_rational(e.I1, beta), i3 = eval_at_rational(e.I3, beta),
                 i5 = eval_at_rational(e.I5, beta);
    rep.sum_from_I = BigRat(BigRat(2) * i3 - BigRat(2) * i1 * i1).get_d();
    rep.sumsq_from_I = BigRat(ratio(56, 3) * i5 - BigRat(40) * i3 * i1 +
                              ratio(64, 3) * i1 * i1 * i1 + BigRat(12) * i3 -
                              BigRat(12) * i1 * i1)
                           .get_d();

    rep.err_sum = std::abs(rep.sum_numeric - rep.sum_exact);
    rep.err_sum_from_I = std::abs(rep.sum_numeric - rep.sum_from_I);
    rep.err_sumsq_conjectural = std::abs(rep.sumsq_numeric - rep.sumsq_conjectural);
    rep.err_sumsq_from_I = std::abs(rep.sumsq_numeric - rep.sumsq_from_I);
    return rep;
}

}  // namespace lw
