#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lw {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Thrown when an exact ring division leaves a remainder.  Every division
/// performed by this library is guaranteed exact by a closed formula, so a
/// remainder always signals a transcription bug, never a data problem.
struct InexactDivision : std::runtime_error {
    explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const BigRat& x) { return sgn(x) == 0; }

/// Canonicalized rational a/b.
inline BigRat ratio(long a, long b) {
    BigRat r(a, b);
    r.canonicalize();
    return r;
}

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (is_zero(b)) throw InexactDivision("integer division by zero");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (!is_zero(r)) throw InexactDivision("inexact integer division");
    return q;
}
inline BigRat exact_div(const BigRat& a, const BigRat& b) {
    if (is_zero(b)) throw InexactDivision("rational division by zero");
    return a / b;
}

template <class T>
struct Poly;

template <class T>
struct RingTraits {
    static T zero() { return T(0); }
    static T one() { return T(1); }
    static T from_long(long v) { return T(v); }
};
template <class C>
struct RingTraits<Poly<C>> {
    static Poly<C> zero() { return {}; }
    static Poly<C> one() { return Poly<C>(RingTraits<C>::one()); }
    static Poly<C> from_long(long v) { return Poly<C>(RingTraits<C>::from_long(v)); }
};

/* Dense univariate polynomial over an exact coefficient ring T.
 * Index = power of the variable.  The zero polynomial is the empty vector;
 * trailing zero coefficients are never stored.
 */
template <class T>
struct Poly {
    std::vector<T> c;

    Poly() = default;
    explicit Poly(T constant) {
        if (!is_zero(constant)) c.push_back(std::move(constant));
    }
    static Poly var() {
        Poly p;
        p.c = {RingTraits<T>::zero(), RingTraits<T>::one()};
        return p;
    }
    static Poly monomial(int k, T coeff) {
        Poly p;
        if (is_zero(coeff)) return p;
        p.c.assign(static_cast<size_t>(k) + 1, RingTraits<T>::zero());
        p.c.back() = std::move(coeff);
        return p;
    }

    bool zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
    const T& leading() const { return c.back(); }
    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c.size())) return RingTraits<T>::zero();
        return c[static_cast<size_t>(k)];
    }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), RingTraits<T>::zero());
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), RingTraits<T>::zero());
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.zero() || b.zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, RingTraits<T>::zero());
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const T& s) {
        Poly r = a;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }

    Poly derivative() const {
        Poly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i)
            r.c[i - 1] = c[i] * RingTraits<T>::from_long(static_cast<long>(i));
        r.trim();
        return r;
    }

    /// Multiply by the variable to the k-th power.
    Poly shifted_up(int k) const {
        Poly r;
        if (zero()) return r;
        r.c.assign(c.size() + static_cast<size_t>(k), RingTraits<T>::zero());
        for (size_t i = 0; i < c.size(); ++i) r.c[i + static_cast<size_t>(k)] = c[i];
        return r;
    }

    /// Divide by the variable to the k-th power; the low coefficients must vanish.
    Poly shifted_down(int k) const {
        for (int i = 0; i < k; ++i)
            if (!is_zero(coeff(i))) throw InexactDivision("nonzero low-order coefficient");
        Poly r;
        if (static_cast<int>(c.size()) <= k) return r;
        r.c.assign(c.begin() + k, c.end());
        return r;
    }
};

template <class T>
bool is_zero(const Poly<T>& p) {
    return p.zero();
}

/// Exact polynomial division; quotient must exist in the coefficient ring.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
    if (b.zero()) throw InexactDivision("polynomial division by zero");
    if (a.zero()) return {};
    if (a.degree() < b.degree()) throw InexactDivision("degree of divisor too large");
    Poly<T> rem = a, q;
    q.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, RingTraits<T>::zero());
    while (!rem.zero() && rem.degree() >= b.degree()) {
        T t = exact_div(rem.leading(), b.leading());
        int k = rem.degree() - b.degree();
        q.c[static_cast<size_t>(k)] = t;
        rem = rem - Poly<T>::monomial(k, t) * b;
    }
    if (!rem.zero()) throw InexactDivision("nonzero polynomial remainder");
    q.trim();
    return q;
}

using PolyB = Poly<BigInt>;    // Z[beta]
using PolyYB = Poly<PolyB>;    // Z[beta][y]
using RatPoly = Poly<BigRat>;  // Q[beta] (also used for Q[x], Q[y], Q[z])

inline PolyB beta_poly() { return PolyB::var(); }

/// p(beta) -> p(beta + k)
inline PolyB substitute_beta_shift(const PolyB& p, long k) {
    PolyB shifted = PolyB::var() + PolyB(BigInt(k));
    PolyB acc;
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * shifted + PolyB(p.c[i]);
    return acc;
}

/// p(beta) -> p(-beta)
template <class T>
Poly<T> substitute_negate(const Poly<T>& p) {
    Poly<T> r = p;
    for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
    return r;
}

inline RatPoly to_rat(const PolyB& p) {
    RatPoly r;
    r.c.reserve(p.c.size());
    for (const auto& x : p.c) r.c.emplace_back(x);
    return r;
}

/// Q[beta] -> Z[beta]; throws if any coefficient is not an integer.
inline PolyB to_int(const RatPoly& p) {
    PolyB r;
    r.c.reserve(p.c.size());
    for (const auto& x : p.c) {
        if (x.get_den() != 1) throw InexactDivision("non-integer coefficient");
        r.c.push_back(x.get_num());
    }
    return r;
}

inline BigRat eval_at_rational(const PolyB& p, const BigRat& x) {
    BigRat acc(0);
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + BigRat(p.c[i]);
    return acc;
}

inline BigRat eval_at_rational(const RatPoly& p, const BigRat& x) {
    BigRat acc(0);
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
    return acc;
}

/// Evaluate a polynomial in y over Z[beta] at a rational beta.
inline RatPoly eval_beta(const PolyYB& p, const BigRat& beta) {
    RatPoly r;
    r.c.reserve(p.c.size());
    for (const auto& cb : p.c) r.c.push_back(eval_at_rational(cb, beta));
    r.trim();
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Rising Pochhammer (beta + a)_count as an element of Z[beta]; count >= 0.
inline PolyB pochhammer_beta(long a, long count) {
    PolyB r(BigInt(1));
    for (long t = 0; t < count; ++t) r = r * (beta_poly() + PolyB(BigInt(a + t)));
    return r;
}

/// Monic generalized Laguerre polynomial of degree n: coefficients in Z[beta][y].
/// [y^i] = (-1)^(n+i) C(n,i) (beta+i+1)_(n-i).
inline PolyYB laguerre_monic(long n) {
    PolyYB p;
    p.c.resize(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        PolyB coef = pochhammer_beta(i + 1, n - i) * binomial(n, i);
        if ((n + i) % 2 != 0) coef = -coef;
        p.c[static_cast<size_t>(i)] = coef;
    }
    p.trim();
    return p;
}

/* Fraction-free (Bareiss) determinant.  Exact over any integral domain with
 * exact_div; row swaps tracked by sign.  Matrix is consumed.
 */
template <class T>
T ff_determinant(std::vector<std::vector<T>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("ff_determinant: matrix not square");
    if (n == 0) return RingTraits<T>::one();  // empty product convention
    int sign = 1;
    T prev = RingTraits<T>::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            size_t p = k + 1;
            while (p < n && is_zero(m[p][k])) ++p;
            if (p == n) return RingTraits<T>::zero();
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = RingTraits<T>::zero();
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return sign == 1 ? det : -det;
}

}  // namespace lw
