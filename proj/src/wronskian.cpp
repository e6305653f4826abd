#include "lw/wronskian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lw {

StrictVector::StrictVector(std::vector<long> vv) : v(std::move(vv)) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || (i + 1 < v.size() && v[i] <= v[i + 1]))
            throw std::invalid_argument("not strictly decreasing non-negative");
    }
}

StrictVector StrictVector::from_partition(const Partition& p, int r) {
    return StrictVector(plus_staircase(p, r));
}

long StrictVector::sum() const {
    long s = 0;
    for (long x : v) s += x;
    return s;
}

Partition StrictVector::to_partition() const {
    const int r = size();
    std::vector<long> parts;
    for (int i = 0; i < r; ++i) {
        long p = v[static_cast<size_t>(i)] - (r - 1 - i);
        if (p < 0) throw std::domain_error("vector is not lambda + delta_r");
        if (p > 0) parts.push_back(p);
    }
    return Partition(parts);
}

static long binom2(long k) { return k * (k - 1) / 2; }

// Delta(v) = prod_{i<j} (v_j - v_i); negative for decreasing vectors.
static BigInt vandermonde(const std::vector<long>& v) {
    BigInt d(1);
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) d *= BigInt(v[j] - v[i]);
    return d;
}

PolyB kappa(const StrictVector& m, const StrictVector& n) {
    const long r = m.size(), s = n.size();
    BigInt scalar = vandermonde(m.v) * vandermonde(n.v);
    mpz_mul_2exp(scalar.get_mpz_t(), scalar.get_mpz_t(),
                 static_cast<unsigned long>(binom2(r + s)));
    PolyB out(scalar);
    for (long mi : m.v)
        for (long nj : n.v) out = out * (PolyB(BigInt(nj - mi)) - beta_poly());
    return out;
}

/* Wronskian rows in factored form.  Each eigenfunction is
 *   x^a e^{-x^2/2} q(x^2)   with  a = 1/2 +- beta,
 * and one x-derivative maps q to  a q + 2y q' - y q  while lowering a by one.
 * Working with qhat_k = 2^k q_k keeps all coefficients in Z[beta]:
 *   qhat_{k+1} = (2a - 2k) qhat_k + 4y qhat_k' - 2y qhat_k.
 * Factoring the column and row powers out of the determinant leaves
 *   det(qhat) = 2^C(L,2) kappa y^{C(r,2)+C(s,2)} phi_tilde.
 */
PolyYB phi_tilde(const StrictVector& m, const StrictVector& n) {
    const int r = m.size(), s = n.size(), L = r + s;
    const long d = m.sum() + n.sum() - binom2(r) - binom2(s);

    std::vector<std::vector<PolyYB>> mat(static_cast<size_t>(L),
                                         std::vector<PolyYB>(static_cast<size_t>(L)));
    const PolyYB y = PolyYB::var();
    for (int col = 0; col < L; ++col) {
        const bool plus = col < r;
        const long deg = plus ? m.v[static_cast<size_t>(col)] : n.v[static_cast<size_t>(col - r)];
        PolyYB q = laguerre_monic(deg);
        if (!plus)
            for (auto& cb : q.c) cb = substitute_negate(cb);
        // 2a = 1 + 2 beta for psi_+, 1 - 2 beta for psi_-
        PolyB two_a = PolyB(BigInt(1)) + (plus ? beta_poly() * BigInt(2) : -(beta_poly() * BigInt(2)));
        for (int row = 0; row < L; ++row) {
            mat[static_cast<size_t>(row)][static_cast<size_t>(col)] = q;
            if (row + 1 < L) {
                PolyB mult = two_a - PolyB(BigInt(2L * row));
                q = q * mult + y * q.derivative() * PolyB(BigInt(4)) - y * q * PolyB(BigInt(2));
            }
        }
    }

    PolyYB det = ff_determinant(std::move(mat));
    det = det.shifted_down(static_cast<int>(binom2(r) + binom2(s)));

    PolyB divisor = kappa(m, n);
    BigInt pow2(1);
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<unsigned long>(binom2(L)));
    divisor = divisor * pow2;
    PolyYB out;
    out.c.resize(det.c.size());
    for (size_t k = 0; k < det.c.size(); ++k) out.c[k] = exact_div(det.c[k], divisor);
    out.trim();

    if (out.degree() != d || out.leading() != PolyB(BigInt(1)))
        throw std::logic_error("phi_tilde: structure theorem violated (degree or monicity)");
    for (int k = 0; k <= out.degree(); ++k)
        if (out.coeff(k).degree() > d - k)
            throw std::logic_error("phi_tilde: beta-degree bound violated");
    return out;
}

PolyYB phi_padded(const Partition& lam, const Partition& mu, int r, int s) {
    PolyYB p = phi_tilde(StrictVector::from_partition(lam, r), StrictVector::from_partition(mu, s));
    for (auto& cb : p.c) cb = substitute_beta_shift(cb, s - r);
    return p;
}

PolyYB phi(const Partition& lam, const Partition& mu) {
    return phi_padded(lam, mu, lam.length(), mu.length());
}

PolyB constant_term_hooks_core(const Partition& lam, const Partition& mu, long c) {
    Partition big = from_core_quotient(c, lam, mu);
    CoreQuotient cq = two_core_quotient(big);

    // beta + (-1)^c (1/2 + c): track doubled values so everything stays in Z[beta].
    long shift = (c % 2 == 0) ? (1 + 2 * c) : -(1 + 2 * c);
    auto factor = [&](long hook, int sign) {
        // hook/2 + sign*(beta + shift/2), doubled: hook + sign*(2 beta + shift)
        PolyB f = beta_poly() * BigInt(2 * sign) + PolyB(BigInt(hook + sign * shift));
        return f;
    };

    PolyB num(BigInt(1));
    long num_factors = 0;
    for (const auto& oc : odd_hook_cells(big)) {
        num = num * factor(oc.hook, oc.sign);
        ++num_factors;
    }
    std::vector<long> staircase;
    for (long k = c; k >= 1; --k) staircase.push_back(k);
    Partition core{staircase};
    PolyB den(BigInt(1));
    long den_factors = 0;
    for (int i = 1; i <= core.length(); ++i) {
        int sign = ((core.part(i) - i) % 2 + 2) % 2 == 0 ? 1 : -1;
        for (int j = 1; j <= core.part(i); ++j) {
            den = den * factor(hook_length(core, {i, j}), sign);
            ++den_factors;
        }
    }
    // undo the doubling: each factor above is twice the underlying one
    if (num_factors < den_factors)
        throw std::logic_error("odd-hook count below the staircase size");
    BigInt pow2(1);
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<unsigned long>(num_factors - den_factors));
    PolyB out = exact_div(num, den * pow2);
    if ((lam.size() + mu.size() + (cq.v_odd ? 1 : 0)) % 2 != 0) out = -out;
    return out;
}

PolyB constant_term_hooks(const Partition& lam, const Partition& mu) {
    return constant_term_hooks_core(lam, mu, 0);
}

/* Fraction-field evaluation of the Pochhammer-quotient constant term.  Every
 * factor is linear of the form +-(beta - root); we track the global sign and
 * the multisets of roots upstairs and downstairs, cancel, and demand that the
 * denominator empties out.
 */
PolyB constant_term_pochhammer(const StrictVector& m, const StrictVector& n) {
    const int r = m.size(), s = n.size();
    const long d = m.sum() + n.sum() - binom2(r) - binom2(s);

    int sign = (d % 2 == 0) ? 1 : -1;
    std::map<long, long> num_roots, den_roots;  // root -> multiplicity
    auto add = [](std::map<long, long>& m_, long root, long mult) { m_[root] += mult; };

    // (beta + a)_count = prod (beta + a + t): roots -(a+t); negative count flips side.
    auto pochhammer = [&](long a, long count, bool numerator) {
        auto& dst = numerator ? num_roots : den_roots;
        auto& other = numerator ? den_roots : num_roots;
        if (count >= 0) {
            for (long t = 0; t < count; ++t) add(dst, -(a + t), 1);
        } else {
            for (long t = 1; t <= -count; ++t) add(other, -(a - t), 1);
        }
    };

    for (int i = 1; i <= r; ++i) pochhammer(i, m.v[static_cast<size_t>(i - 1)] + 1 - i, true);
    for (int j = 1; j <= s; ++j) {
        // (-beta + j)_count = prod (j + t - beta) = prod -(beta - (j+t))
        long count = n.v[static_cast<size_t>(j - 1)] + 1 - j;
        if (count >= 0) {
            for (long t = 0; t < count; ++t) {
                add(num_roots, j + t, 1);
                sign = -sign;
            }
        } else {
            for (long t = 1; t <= -count; ++t) {
                add(den_roots, j - t, 1);
                sign = -sign;
            }
        }
    }
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= s; ++j) {
            add(num_roots, j - i, 1);  // (j - i - beta) = -(beta - (j-i))
            sign = -sign;
            add(den_roots, n.v[static_cast<size_t>(j - 1)] - m.v[static_cast<size_t>(i - 1)], 1);
            sign = -sign;
        }

    for (auto& [root, mult] : den_roots) {
        auto it = num_roots.find(root);
        long take = (it == num_roots.end()) ? 0 : std::min(mult, it->second);
        if (take < mult) throw std::logic_error("pochhammer constant term: not a polynomial");
        it->second -= take;
    }
    PolyB out{BigInt(sign)};
    for (const auto& [root, mult] : num_roots)
        for (long t = 0; t < mult; ++t) out = out * (beta_poly() - PolyB(BigInt(root)));
    return out;
}

std::pair<PolyB, PolyB> subleading(const StrictVector& m, const StrictVector& n) {
    const long r = m.size(), s = n.size();
    const long d = m.sum() + n.sum() - binom2(r) - binom2(s);
    if (d < 1) throw std::domain_error("subleading: degree too small");

    const long N = r + s, R = binom2(r), S = binom2(s);
    auto power_sum = [&](int k, int sgn) {
        BigRat acc(0);
        for (long x : m.v) {
            BigRat p(1);
            for (int t = 0; t < k; ++t) p *= x;
            acc += p;
        }
        for (long x : n.v) {
            BigRat p(1);
            for (int t = 0; t < k; ++t) p *= x;
            acc += sgn * p;
        }
        return acc;
    };
    const BigRat r1p = power_sum(1, +1), r1m = power_sum(1, -1);
    const BigRat r2p = power_sum(2, +1), r2m = power_sum(2, -1);
    const BigRat r3p = power_sum(3, +1);
    auto C3 = [](long k) -> BigRat { return BigRat(k * (k - 1) * (k - 2)) / 6; };

    const RatPoly beta = RatPoly::var();
    RatPoly lead1 = RatPoly(-r2p + BigRat(N - 1) * r1p - C3(N)) -
                    beta * RatPoly(r1m - BigRat(R) + BigRat(S));

    PolyB first = to_int(lead1);
    if (d < 2) return {first, PolyB()};

    BigRat c0 = r2p * r2p / 2 - r3p - BigRat(N - 1) * r2p * r1p +
                BigRat((N - 1) * (N * N - 2 * N + 9)) / 6 * r2p +
                BigRat(N * N - 2 * N + 2) / 2 * r1p * r1p -
                BigRat((N - 1) * (N - 1) * (N * N - 2 * N + 6)) / 6 * r1p +
                BigRat(N * (N - 1) * (N - 1) * (N - 2) * (N * N - 2 * N + 9)) / 72;
    BigRat c1 = r2p * r1m - BigRat(3) / 2 * r2m -
                BigRat(N - 1) * (r1p * r1m + BigRat(r - s) / 2 * r2p) +
                BigRat((N * N - 2 * N + 2) * (r - s)) / 2 * r1p +
                BigRat((N - 1) * (N * N - 2 * N + 9)) / 6 * r1m -
                BigRat((N * N - 2 * N + 6) * (N - 1) * (N - 1) * (r - s)) / 12;
    BigRat c2 = r1m * r1m / 2 - r1p / 2 - BigRat(R - S) * r1m +
                BigRat(R * (R + 1) + S * (S + 1)) / 2 - BigRat(R * S);

    RatPoly lead2 = RatPoly(c0) + beta * RatPoly(c1) + beta * beta * RatPoly(c2);
    return {first, to_int(lead2)};
}

PolyYB p_poly(const Partition& lam) {
    PolyYB full = phi(lam, conjugate(lam));
    PolyYB out;
    out.c.resize(static_cast<size_t>(full.degree() / 2) + 1);
    for (int k = 0; k <= full.degree(); ++k) {
        if (k % 2 != 0) {
            if (!full.coeff(k).zero())
                throw std::logic_error("p_poly: Phi_{lambda,lambda'} not even in y");
        } else {
            out.c[static_cast<size_t>(k / 2)] = full.coeff(k);
        }
    }
    out.trim();
    return out;
}

RatPoly hermite_monic(long n) {
    // H^_0 = 1, H^_1 = x, H^_{k+1} = x H^_k - (k/2) H^_{k-1}
    RatPoly h0(BigRat(1));
    if (n == 0) return h0;
    RatPoly h1 = RatPoly::var();
    for (long k = 1; k < n; ++k) {
        RatPoly h2 = RatPoly::var() * h1 - h0 * ratio(k, 2);
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

bool hermite_reduce_check(const StrictVector& m, const StrictVector& n) {
    const int r = m.size(), s = n.size(), L = r + s;
    std::vector<long> degrees;
    for (long x : m.v) degrees.push_back(2 * x);
    for (long x : n.v) degrees.push_back(2 * x + 1);

    std::vector<std::vector<RatPoly>> mat(static_cast<size_t>(L),
                                          std::vector<RatPoly>(static_cast<size_t>(L)));
    for (int col = 0; col < L; ++col) {
        RatPoly h = hermite_monic(degrees[static_cast<size_t>(col)]);
        for (int row = 0; row < L; ++row) {
            mat[static_cast<size_t>(row)][static_cast<size_t>(col)] = h;
            h = h.derivative();
        }
    }
    RatPoly det = ff_determinant(std::move(mat));

    BigInt delta = vandermonde(degrees);
    if (is_zero(delta)) return false;
    RatPoly scaled;
    scaled.c.reserve(det.c.size());
    for (const auto& x : det.c) scaled.c.push_back(x / BigRat(delta));
    scaled.trim();

    long strip = binom2(r - s);
    RatPoly xpoly;
    try {
        xpoly = scaled.shifted_down(static_cast<int>(strip));
    } catch (const InexactDivision&) {
        return false;
    }

    // substitute y = x^2; odd coefficients must vanish
    RatPoly iny;
    iny.c.resize(xpoly.c.size() / 2 + 1);
    for (int k = 0; k <= xpoly.degree(); ++k) {
        if (k % 2 != 0) {
            if (!is_zero(xpoly.coeff(k))) return false;
        } else {
            iny.c[static_cast<size_t>(k / 2)] = xpoly.coeff(k);
        }
    }
    iny.trim();

    RatPoly expected = eval_beta(phi_tilde(m, n), BigRat(-1, 2));
    return iny == expected;
}

}  // namespace lw
