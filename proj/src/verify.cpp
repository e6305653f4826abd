#include "lw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "lw/coalescence.hpp"
#include "lw/numeric.hpp"
#include "lw/partition.hpp"
#include "lw/poly.hpp"
#include "lw/qkdv.hpp"
#include "lw/shiftsym.hpp"
#include "lw/spectra.hpp"
#include "lw/wronskian.hpp"

namespace lw {

namespace {

using cplx = std::complex<double>;

struct Check {
    SuiteResult res;

    void fail(const std::string& msg) {
        if (res.pass) res.detail = msg;
        res.pass = false;
    }
    void expect(bool ok, const std::string& msg) {
        ++res.checks;
        if (!ok) fail(msg);
    }
};

// All ordered pairs (lambda, mu) with |lambda|+|mu| <= total.
std::vector<std::pair<Partition, Partition>> pairs_up_to(long total) {
    std::vector<std::pair<Partition, Partition>> out;
    for (long n = 0; n <= total; ++n)
        for (long a = 0; a <= n; ++a)
            for_each_partition(a, [&](const Partition& lam) {
                for_each_partition(n - a, [&](const Partition& mu) { out.emplace_back(lam, mu); });
            });
    return out;
}

std::vector<Partition> partitions_up_to(long total) {
    std::vector<Partition> out;
    for (long n = 0; n <= total; ++n)
        for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

// Deterministic fan-out over items; results merged in input order.
template <class Item, class Fn>
void parallel_each(const std::vector<Item>& items, int jobs, Check& ck, Fn fn) {
    if (jobs <= 1 || items.size() < 2) {
        for (const auto& it : items) fn(it, ck);
        return;
    }
    std::vector<Check> parts(items.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            fn(items[i], parts[i]);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(jobs, static_cast<int>(items.size()));
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& p : parts) {
        ck.res.checks += p.res.checks;
        if (!p.res.pass) ck.fail(p.res.detail);
    }
}

// simple deterministic PRNG for property tests
struct Rng {
    unsigned long long s = 0x9e3779b97f4a7c15ULL;
    unsigned long long next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

PolyB random_polyb(Rng& rng, int deg, long amp) {
    PolyB p;
    p.c.resize(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) p.c[static_cast<size_t>(i)] = BigInt(rng.range(-amp, amp));
    p.trim();
    return p;
}
PolyYB random_polyyb(Rng& rng, int ydeg, int bdeg, long amp) {
    PolyYB p;
    p.c.resize(static_cast<size_t>(ydeg) + 1);
    for (int i = 0; i <= ydeg; ++i) p.c[static_cast<size_t>(i)] = random_polyb(rng, bdeg, amp);
    p.trim();
    return p;
}

template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
    const size_t n = m.size();
    if (n == 0) return RingTraits<T>::one();
    if (n == 1) return m[0][0];
    T acc = RingTraits<T>::zero();
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<T>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        T term = m[0][j] * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

long pentagonal_p(long n) {  // Euler's recurrence, used as an oracle
    static std::vector<long> memo{1};
    while (static_cast<long>(memo.size()) <= n) {
        long k = static_cast<long>(memo.size());
        long acc = 0;
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
            if (g1 > k && g2 > k) break;
            long sign = (j % 2 == 1) ? 1 : -1;
            if (g1 <= k) acc += sign * memo[static_cast<size_t>(k - g1)];
            if (g2 <= k) acc += sign * memo[static_cast<size_t>(k - g2)];
        }
        memo.push_back(acc);
    }
    return memo[static_cast<size_t>(n)];
}

// ---------------------------------------------------------------- suites

SuiteResult suite_partitions(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "partitions";
    const long cap = std::min<long>(opt.max_size + 7, 12);

    for (long n = 0; n <= std::min<long>(cap, 10); ++n)
        ck.expect(partition_count(n) == pentagonal_p(n), "p(n) mismatch at n=" + std::to_string(n));

    ck.expect(conjugate(Partition::parse("4,3,1,1")) == Partition::parse("4,2,2,1"),
              "conjugate(4,3,1,1)");
    ck.expect(hook_length(Partition::parse("4,3,1,1"), {1, 1}) == 7, "hook (1,1) of (4,3,1,1)");
    ck.expect(hook_length(Partition::parse("4,3,1,1"), {1, 2}) == 4, "hook (1,2) of (4,3,1,1)");
    ck.expect(remove_border_strip(Partition::parse("4,3,1,1"), {1, 2}) == Partition::parse("2,1,1,1"),
              "border strip at (1,2) of (4,3,1,1)");
    {
        CoreQuotient cq = two_core_quotient(Partition::parse("4,3,1,1"));
        ck.expect(cq.c == 2 && cq.lam == Partition::parse("1") && cq.mu == Partition::parse("1,1") &&
                      cq.v_odd,
                  "2-core/quotient of (4,3,1,1)");
        CoreQuotient cq2 = two_core_quotient(Partition::parse("5,5,1,1"));
        ck.expect(cq2.c == 0 && cq2.lam == Partition::parse("3,1") && cq2.mu == Partition::parse("2") &&
                      !cq2.v_odd,
                  "2-core/quotient of (5,5,1,1)");
        ck.expect(from_core_quotient(0, Partition::parse("3,1"), Partition::parse("2")) ==
                      Partition::parse("5,5,1,1"),
                  "reconstruction of (5,5,1,1)");
    }

    for (const auto& lam : partitions_up_to(cap)) {
        ck.expect(conjugate(conjugate(lam)) == lam, "conjugation not an involution: " + lam.to_string());
        ck.expect(conjugate(lam).size() == lam.size(), "conjugate size: " + lam.to_string());

        // hook multiset invariance under conjugation
        std::multiset<long> h1, h2;
        Partition cj = conjugate(lam);
        for (int i = 1; i <= lam.length(); ++i)
            for (int j = 1; j <= lam.part(i); ++j) h1.insert(hook_length(lam, {i, j}));
        for (int i = 1; i <= cj.length(); ++i)
            for (int j = 1; j <= cj.part(i); ++j) h2.insert(hook_length(cj, {i, j}));
        ck.expect(h1 == h2, "hook multiset vs conjugate: " + lam.to_string());

        // border strips shrink by the hook length
        for (int i = 1; i <= lam.length(); ++i)
            for (int j = 1; j <= lam.part(i); ++j)
                ck.expect(remove_border_strip(lam, {i, j}).size() ==
                              lam.size() - hook_length(lam, {i, j}),
                          "strip size: " + lam.to_string());

        // core/quotient round trip, weight identity, padding independence
        CoreQuotient cq = two_core_quotient(lam);
        ck.expect(from_core_quotient(cq.c, cq.lam, cq.mu) == lam, "round trip: " + lam.to_string());
        ck.expect(lam.size() == cq.c * (cq.c + 1) / 2 + 2 * (cq.lam.size() + cq.mu.size()),
                  "weight identity: " + lam.to_string());
        long top = std::max<long>(lam.length(), lam.part(1));
        int L = static_cast<int>(2 * ((top + 1) / 2) + 2);
        CoreQuotient cq2 = two_core_quotient_padded(lam, L + 2);
        ck.expect(cq.c == cq2.c && cq.lam == cq2.lam && cq.mu == cq2.mu && cq.v_odd == cq2.v_odd,
                  "padding dependence: " + lam.to_string());
    }
    return ck.res;
}

SuiteResult suite_exactalg(const VerifyOptions&) {
    Check ck;
    ck.res.name = "exactalg";
    Rng rng;

    ck.expect(exact_div(beta_poly() * beta_poly() - PolyB(BigInt(1)), beta_poly() - PolyB(BigInt(1))) ==
                  beta_poly() + PolyB(BigInt(1)),
              "(b^2-1)/(b-1)");
    {
        PolyB sq = beta_poly() * beta_poly();
        PolyB shifted = substitute_beta_shift(sq, -2);
        PolyB expect = (beta_poly() - PolyB(BigInt(2))) * (beta_poly() - PolyB(BigInt(2)));
        ck.expect(shifted == expect, "substitute_beta_shift(b^2, -2)");
    }
    {
        PolyYB y = PolyYB::var();
        PolyYB b{beta_poly()};
        ck.expect((y - b) * (y + b) == y * y - b * b, "(y-b)(y+b)");
    }

    for (int trial = 0; trial < 40; ++trial) {
        PolyYB a = random_polyyb(rng, 3, 2, 6), b = random_polyyb(rng, 2, 2, 6),
               c = random_polyyb(rng, 2, 1, 6);
        ck.expect((a * b) * c == a * (b * c), "associativity");
        ck.expect(a * (b + c) == a * b + a * c, "distributivity");
        if (!b.zero()) ck.expect(exact_div(a * b, b) == a, "exact_div(a*b, b)");
    }

    for (int size = 2; size <= 4; ++size)
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::vector<PolyYB>> m(static_cast<size_t>(size),
                                               std::vector<PolyYB>(static_cast<size_t>(size)));
            for (auto& row : m)
                for (auto& e : row) e = random_polyyb(rng, 2, 1, 4);
            auto copy = m;
            ck.expect(ff_determinant(std::move(copy)) == cofactor_det(m),
                      "ff_determinant vs cofactor at size " + std::to_string(size));
        }

    // Laguerre ODE: y p'' + (beta + 1 - y) p' + n p = 0
    for (long n = 0; n <= 10; ++n) {
        PolyYB p = laguerre_monic(n);
        PolyYB y = PolyYB::var();
        PolyYB bp1{beta_poly() + PolyB(BigInt(1))};
        PolyYB lhs = y * p.derivative().derivative() + (bp1 - y) * p.derivative() +
                     p * PolyB(BigInt(n));
        ck.expect(lhs.zero(), "Laguerre ODE at n=" + std::to_string(n));
    }

    // Gessel-Viennot binomial determinant
    for (int trial = 0; trial < 12; ++trial) {
        int k = static_cast<int>(rng.range(1, 6));
        std::set<long> vals;
        while (static_cast<int>(vals.size()) < k) vals.insert(rng.range(0, 14));
        std::vector<long> v(vals.rbegin(), vals.rend());
        std::vector<std::vector<BigInt>> m(static_cast<size_t>(k),
                                           std::vector<BigInt>(static_cast<size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                binomial(v[static_cast<size_t>(j)], i);
        BigInt det = ff_determinant(std::move(m));
        BigInt delta(1), delta0(1);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                delta *= BigInt(v[static_cast<size_t>(j)] - v[static_cast<size_t>(i)]);
                delta0 *= BigInt((k - 1 - j) - (k - 1 - i));
            }
        BigInt expect = exact_div(delta, delta0);
        if ((static_cast<long>(k) * (k - 1) / 2) % 2 != 0) expect = -expect;
        ck.expect(det == expect, "Gessel-Viennot identity");
    }

    // Vandermonde-sum identities of the appendix lemma, on random rationals
    for (int trial = 0; trial < 10; ++trial) {
        int N = static_cast<int>(rng.range(2, 6));
        std::vector<BigRat> x;
        std::set<std::pair<long, long>> used;
        while (static_cast<int>(x.size()) < N) {
            long num = rng.range(-12, 12), den = rng.range(1, 4);
            if (!used.insert({num, den}).second) continue;
            x.push_back(ratio(num, den));
        }
        auto delta_of = [&](const std::vector<BigRat>& v) {
            BigRat d(1);
            for (size_t i = 0; i < v.size(); ++i)
                for (size_t j = i + 1; j < v.size(); ++j) d *= (v[j] - v[i]);
            return d;
        };
        BigRat dx = delta_of(x);
        if (sgn(dx) == 0) continue;
        auto ratio_shift = [&](size_t i, long amount) -> BigRat {
            std::vector<BigRat> y = x;
            y[i] -= amount;
            return delta_of(y) / dx;
        };
        auto ratio_shift2 = [&](size_t i, size_t j) -> BigRat {
            std::vector<BigRat> y = x;
            y[i] -= 1;
            y[j] -= 1;
            return delta_of(y) / dx;
        };
        std::vector<BigRat> p(5, BigRat(0));
        for (const auto& xi : x)
            for (int k = 1; k <= 4; ++k) {
                BigRat pw(1);
                for (int t = 0; t < k; ++t) pw *= xi;
                p[static_cast<size_t>(k)] += pw;
            }
        auto C = [&](long a, long b) { return BigRat(binomial(a, b)); };

        BigRat s0(0), s0x(0), s1(0), s1x(0), s1xm(0), s1x2(0), s2(0), s2x(0), s2xx(0);
        for (size_t i = 0; i < x.size(); ++i) {
            BigRat di = ratio_shift(i, 1);
            s0 += di;
            s0x += x[i] * x[i] * di;
            BigRat dii = ratio_shift(i, 2);
            s1 += dii;
            s1x += x[i] * x[i] * dii;
            s1xm += (x[i] - 1) * (x[i] - 1) * dii;
            s1x2 += x[i] * x[i] * (x[i] - 1) * (x[i] - 1) * dii;
            for (size_t j = i + 1; j < x.size(); ++j) {
                BigRat dij = ratio_shift2(i, j);
                s2 += dij;
                s2x += (x[i] * x[i] + x[j] * x[j]) * dij;
                s2xx += x[i] * x[i] * x[j] * x[j] * dij;
            }
        }
        ck.expect(s0 == BigRat(N), "vandermonde sum #1");
        ck.expect(s0x == p[2] - BigRat(N - 1) * p[1] + C(N, 3), "vandermonde sum #2");
        ck.expect(s1 == BigRat(N), "vandermonde sum #3");
        ck.expect(s1x == p[2] - BigRat(2 * (N - 1)) * p[1] + BigRat(4) * C(N, 3),
                  "vandermonde sum #4");
        ck.expect(s1xm == p[2] - BigRat(2 * N) * p[1] + BigRat(N) * BigRat(2L * N * N + 1) / 3,
                  "vandermonde sum #5");
        ck.expect(s1x2 == p[4] - BigRat(2 * (N - 1)) * p[3] - BigRat(2) * p[2] * p[1] +
                              BigRat(2L * N * N - 4 * N + 3) * p[2] +
                              BigRat(2 * (N - 1)) * p[1] * p[1] -
                              ratio(2, 3) * BigRat(N - 1) * BigRat(2L * N * N - 4 * N + 3) * p[1] +
                              ratio(4, 5) * BigRat(N * N - 2 * N + 2) * C(N, 3),
                  "vandermonde sum #6");
        ck.expect(s2 == C(N, 2), "vandermonde sum #7");
        ck.expect(s2x == BigRat(N - 1) * p[2] - BigRat(2) * C(N - 1, 2) * p[1] +
                             BigRat(N - 4) * C(N, 3),
                  "vandermonde sum #8");
        ck.expect(s2xx == -p[4] / 2 + p[2] * p[2] / 2 + BigRat(N - 2) * (p[3] - p[2] * p[1]) +
                              BigRat(N - 2) * BigRat(1L * N * N - 7 * N + 9) / 6 * p[2] +
                              BigRat((N - 2) * (N - 2)) / 2 * p[1] * p[1] -
                              BigRat(N - 2) * C(N - 1, 3) * p[1] +
                              BigRat(5L * N * N - 24 * N + 31) / 15 * C(N, 4),
                  "vandermonde sum #9");
    }
    return ck.res;
}

// memoized Phi cache shared by the wronskian suites within one run
std::map<std::pair<std::string, std::string>, PolyYB>& phi_cache() {
    static std::map<std::pair<std::string, std::string>, PolyYB> cache;
    return cache;
}
std::mutex phi_cache_mutex;

PolyYB phi_cached(const Partition& lam, const Partition& mu) {
    auto key = std::make_pair(lam.to_string(), mu.to_string());
    {
        std::lock_guard<std::mutex> lock(phi_cache_mutex);
        auto it = phi_cache().find(key);
        if (it != phi_cache().end()) return it->second;
    }
    PolyYB val = phi(lam, mu);
    std::lock_guard<std::mutex> lock(phi_cache_mutex);
    phi_cache()[key] = val;
    return val;
}

SuiteResult suite_wronskian_structure(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "wronskian-structure";

    ck.expect(phi_tilde(StrictVector({0}), StrictVector()) == PolyYB{PolyB(BigInt(1))},
              "phi_tilde((0),()) = 1");
    {
        PolyYB expectp = PolyYB::var() - PolyYB(beta_poly() + PolyB(BigInt(1)));
        ck.expect(phi_tilde(StrictVector({1}), StrictVector()) == expectp,
                  "phi_tilde((1),()) = y - (beta+1)");
        PolyYB y = PolyYB::var();
        PolyYB b2{beta_poly() * beta_poly() - PolyB(BigInt(1))};
        ck.expect(phi_tilde(StrictVector({1}), StrictVector({1})) == y * y - b2,
                  "phi_tilde((1),(1)) = y^2 - (beta^2-1)");
    }
    {
        // kappa examples
        ck.expect(kappa(StrictVector({1}), StrictVector()) == PolyB(BigInt(1)), "kappa((1),())");
        ck.expect(kappa(StrictVector({1, 0}), StrictVector()) == PolyB(BigInt(-2)),
                  "kappa((1,0),()) = 2 Delta(1,0) = -2");
        ck.expect(kappa(StrictVector({1}), StrictVector({1})) == -(beta_poly() * BigInt(2)),
                  "kappa((1),(1)) = -2 beta");
    }
    {
        // golden examples of the coalescence section
        RatPoly g1 = eval_beta(phi_cached(Partition::parse("3,1"), Partition::parse("2")), BigRat(1));
        RatPoly expect1;
        expect1.c = {BigRat(0), BigRat(0), BigRat(24), BigRat(-32), BigRat(20), BigRat(-8), BigRat(1)};
        ck.expect(g1 == expect1, "Phi^{(1)}_{(3,1),(2)}");
        RatPoly g2 = eval_beta(phi_cached(Partition::parse("2,1,1"), Partition()), BigRat(3));
        RatPoly expect2;
        expect2.c = {BigRat(24), BigRat(-32), BigRat(20), BigRat(-8), BigRat(1)};
        ck.expect(g2 == expect2, "Phi^{(3)}_{(2,1,1),empty}");
    }

    auto pairs = pairs_up_to(opt.max_size);
    parallel_each(pairs, opt.jobs, ck, [&](const std::pair<Partition, Partition>& pr, Check& c) {
        const auto& [lam, mu] = pr;
        PolyYB p = phi_cached(lam, mu);
        long d = lam.size() + mu.size();
        c.expect(p.degree() == d && p.leading() == PolyB(BigInt(1)),
                 "monic/degree: (" + lam.to_string() + ")x(" + mu.to_string() + ")");
        for (int k = 0; k <= p.degree(); ++k)
            c.expect(p.coeff(k).degree() <= d - k,
                     "beta-degree bound: (" + lam.to_string() + ")x(" + mu.to_string() + ")");
    });
    return ck.res;
}

SuiteResult suite_wronskian_padding(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "wronskian-padding";
    auto pairs = pairs_up_to(std::min<long>(opt.max_size, 6));
    parallel_each(pairs, opt.jobs, ck, [&](const std::pair<Partition, Partition>& pr, Check& c) {
        const auto& [lam, mu] = pr;
        PolyYB base = phi_cached(lam, mu);
        int r = lam.length(), s = mu.length();
        c.expect(phi_padded(lam, mu, r + 1, s + 1) == base,
                 "(r+1,s+1) padding: (" + lam.to_string() + ")x(" + mu.to_string() + ")");
        c.expect(phi_padded(lam, mu, r + 2, s) == base,
                 "(r+2,s) padding: (" + lam.to_string() + ")x(" + mu.to_string() + ")");
    });
    return ck.res;
}

SuiteResult suite_wronskian_symmetry(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "wronskian-symmetry";
    auto pairs = pairs_up_to(opt.max_size);
    parallel_each(pairs, opt.jobs, ck, [&](const std::pair<Partition, Partition>& pr, Check& c) {
        const auto& [lam, mu] = pr;
        PolyYB lhs = phi_cached(conjugate(lam), conjugate(mu));
        PolyYB rhs = phi_cached(mu, lam);
        // (-1)^{|lam|+|mu|} Phi_{mu,lam}(-y)
        for (size_t k = 0; k < rhs.c.size(); ++k)
            if ((k + static_cast<size_t>(lam.size() + mu.size())) % 2 != 0) rhs.c[k] = -rhs.c[k];
        c.expect(lhs == rhs, "symmetry: (" + lam.to_string() + ")x(" + mu.to_string() + ")");

        // reflection: Phi_{lam,mu}(beta) = Phi_{mu,lam}(-beta)
        PolyYB refl = phi_cached(mu, lam);
        for (auto& cb : refl.c) cb = substitute_negate(cb);
        c.expect(phi_cached(lam, mu) == refl,
                 "reflection: (" + lam.to_string() + ")x(" + mu.to_string() + ")");
    });

    // evenness of the symmetric case
    for (const auto& lam : partitions_up_to(std::min<long>(opt.max_size, 5))) {
        PolyYB p = phi_cached(lam, conjugate(lam));
        bool even = true;
        for (int k = 1; k <= p.degree(); k += 2)
            if (!p.coeff(k).zero()) even = false;
        ck.expect(even, "evenness: " + lam.to_string());
    }
    return ck.res;
}

SuiteResult suite_constant_term(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "constant-term";

    ck.expect(constant_term_hooks(Partition::parse("3,1"), Partition::parse("2")) ==
                  (beta_poly() + PolyB(BigInt(3))) * (beta_poly() + PolyB(BigInt(2))) *
                      beta_poly() * beta_poly() * (beta_poly() - PolyB(BigInt(1))) *
                      (beta_poly() - PolyB(BigInt(3))),
              "hook constant term of ((3,1),(2))");
    ck.expect(constant_term_hooks(Partition(), Partition()) == PolyB(BigInt(1)),
              "hook constant term of (empty,empty)");

    auto pairs = pairs_up_to(opt.max_size);
    parallel_each(pairs, opt.jobs, ck, [&](const std::pair<Partition, Partition>& pr, Check& c) {
        const auto& [lam, mu] = pr;
        PolyB from_phi = phi_cached(lam, mu).coeff(0);
        PolyB from_hooks = constant_term_hooks(lam, mu);
        int r = lam.length(), s = mu.length();
        PolyB from_poch = substitute_beta_shift(
            constant_term_pochhammer(StrictVector::from_partition(lam, r),
                                     StrictVector::from_partition(mu, s)),
            s - r);
        c.expect(from_phi == from_hooks,
                 "phi vs hooks: (" + lam.to_string() + ")x(" + mu.to_string() + ")");
        c.expect(from_phi == from_poch,
                 "phi vs pochhammer: (" + lam.to_string() + ")x(" + mu.to_string() + ")");
        // staircase-core variant is c-independent
        for (long cc = 1; cc <= 3; ++cc)
            c.expect(constant_term_hooks_core(lam, mu, cc) == from_hooks,
                     "core variant at c=" + std::to_string(cc));
    });
    return ck.res;
}

SuiteResult suite_subleading(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "subleading";
    auto pairs = pairs_up_to(opt.max_size);
    parallel_each(pairs, opt.jobs, ck, [&](const std::pair<Partition, Partition>& pr, Check& c) {
        const auto& [lam, mu] = pr;
        long d = lam.size() + mu.size();
        if (d < 1) return;
        StrictVector m = StrictVector::from_partition(lam, lam.length());
        StrictVector n = StrictVector::from_partition(mu, mu.length());
        PolyYB p = phi_tilde(m, n);
        auto [lead1, lead2] = subleading(m, n);
        c.expect(p.coeff(p.degree() - 1) == lead1,
                 "phi[d-1]: (" + lam.to_string() + ")x(" + mu.to_string() + ")");
        if (d >= 2)
            c.expect(p.coeff(p.degree() - 2) == lead2,
                     "phi[d-2]: (" + lam.to_string() + ")x(" + mu.to_string() + ")");
    });
    return ck.res;
}

SuiteResult suite_hermite(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "hermite";
    auto pairs = pairs_up_to(std::min<long>(opt.max_size, 6));
    parallel_each(pairs, opt.jobs, ck, [&](const std::pair<Partition, Partition>& pr, Check& c) {
        const auto& [lam, mu] = pr;
        StrictVector m = StrictVector::from_partition(lam, lam.length());
        StrictVector n = StrictVector::from_partition(mu, mu.length());
        c.expect(hermite_reduce_check(m, n),
                 "hermite reduction: (" + lam.to_string() + ")x(" + mu.to_string() + ")");
    });
    return ck.res;
}

SuiteResult suite_coalescence(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "coalescence";

    {  // worked example
        Triple t{BigRat(1), Partition::parse("3,1"), Partition::parse("2")};
        ck.expect(!is_reduced(t), "(1,(3,1),(2)) must not be reduced");
        auto edges = coalescence_edges(t);
        bool found = false;
        for (const auto& e : edges)
            if (e.cell.i == 2 && e.cell.j == 3 && e.target.beta == BigRat(3) &&
                e.target.lam == Partition::parse("2,1,1") && e.target.mu == Partition())
                found = true;
        ck.expect(found, "edge (2,3) of the worked example");
        auto [red, expo] = reduce(t);
        ck.expect(red.beta == BigRat(3) && red.lam == Partition::parse("2,1,1") &&
                      red.mu == Partition() && expo == 2,
                  "reduce worked example");
        ck.expect(is_reduced(Triple{ratio(1, 2), Partition::parse("3,1"), Partition::parse("2")}),
                  "non-integer beta is reduced");
    }

    auto pairs = pairs_up_to(opt.max_size);
    parallel_each(pairs, opt.jobs, ck, [&](const std::pair<Partition, Partition>& pr, Check& c) {
        const auto& [lam, mu] = pr;
        PolyB ct = constant_term_hooks(lam, mu);
        long bound = 2 * (lam.size() + mu.size()) + 1;
        for (long b = -bound; b <= bound; ++b) {
            Triple t{BigRat(b), lam, mu};
            auto edges = coalescence_edges(t);
            bool root = sgn(eval_at_rational(ct, BigRat(b))) == 0;
            c.expect(edges.empty() == !root, "edges exist iff the constant term vanishes");
            for (const auto& e : edges) {
                // polynomial identity Phi = y^{|beta|+1} Phi~ and monotonicity
                RatPoly lhs = eval_beta(phi_cached(lam, mu), BigRat(b));
                RatPoly rhs = eval_beta(phi_cached(e.target.lam, e.target.mu), e.target.beta);
                long k = std::labs(b) + 1;
                c.expect(lhs == rhs.shifted_up(static_cast<int>(k)),
                         "coalescence identity at beta=" + std::to_string(b) + " for (" +
                             lam.to_string() + ")x(" + mu.to_string() + ")");
                c.expect(e.target.lam.size() + e.target.mu.size() < lam.size() + mu.size(),
                         "degree must drop along an edge");
                c.expect(std::labs(mpz_get_si(e.target.beta.get_num().get_mpz_t())) > std::labs(b) ||
                             (b == 0),
                         "momentum must grow along an edge");
            }
            if (root) {
                auto [red, expo] = reduce(t);
                c.expect(is_reduced(red), "reduce output must be reduced");
                auto [red2, expo2] = reduce(red);
                c.expect(red2 == red && expo2 == 0, "reduce must be idempotent");
                c.expect(expo == lam.size() + mu.size() - red.lam.size() - red.mu.size(),
                         "exponent bookkeeping");
            }
        }
    });
    return ck.res;
}

SuiteResult suite_bset(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "bset";
    ck.expect(c_set(1) == std::set<long>({-1, 1}), "C_1");
    ck.expect(c_set(3) == std::set<long>({-5, -3, -1, 0, 1, 3, 5}), "C_3");
    for (long n = 0; n <= std::max<long>(opt.max_size, 10); ++n)
        ck.expect(b_set(n) == c_set(n), "B_n = C_n at n=" + std::to_string(n));
    return ck.res;
}

SuiteResult suite_shiftsym(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "shiftsym";
    const long cap = std::max<long>(opt.max_size, 8);

    ck.expect(pk(Partition::parse("2,1"), 3) == BigRat(0), "p3 of self-conjugate (2,1)");
    ck.expect(pk(Partition::parse("1"), 4) == ratio(1, 4), "p4((1)) = 1/4");

    for (const auto& lam : partitions_up_to(std::min<long>(cap, 10))) {
        ck.expect(pk(lam, 2) == BigRat(lam.size()), "p2 = |lambda| at " + lam.to_string());
        Partition cj = conjugate(lam);
        for (int k = 0; k <= 6; ++k) {
            BigRat lhs = pk(cj, k);
            BigRat rhs = pk(lam, k);
            if (k % 2 != 0) rhs = -rhs;
            ck.expect(lhs == rhs, "conjugation sign of p_k at " + lam.to_string());
        }
        // tail stability: adding explicit zero parts to the sum changes nothing
        for (int k = 1; k <= 6; ++k) {
            BigRat direct = pk(lam, k);
            BigRat padded(0);
            for (int i = 1; i <= lam.length() + 5; ++i) {
                BigRat a = ratio(2 * lam.part(i) - 2 * i + 1, 2), b = ratio(-2 * i + 1, 2);
                BigRat pa(1), pb(1);
                for (int t = 0; t < k - 1; ++t) {
                    pa *= a;
                    pb *= b;
                }
                padded += pa - pb;
            }
            ck.expect(direct == padded, "tail stability of p_k at " + lam.to_string());
        }
    }

    {  // eigenvalues for the empty partition: (h0, h0^2, h0^3)
        QkdvEigen e = qkdv_eigenvalues(Partition());
        RatPoly b = RatPoly::var();
        RatPoly h0 = (b * b - RatPoly(BigRat(1))) * ratio(1, 8);
        ck.expect(e.I1 == h0 && e.I3 == h0 * h0 && e.I5 == h0 * h0 * h0, "empty-partition eigenvalues");
    }
    return ck.res;
}

SuiteResult suite_rootsum(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "rootsum";
    std::vector<Partition> lams = partitions_up_to(opt.max_size);
    parallel_each(lams, opt.jobs, ck, [&](const Partition& lam, Check& c) {
        // Sigma z = -phi^{[d-2]} of Phi_{lambda,lambda'}
        StrictVector m = StrictVector::from_partition(lam, lam.length());
        StrictVector n = StrictVector::from_partition(conjugate(lam), conjugate(lam).length());
        RatPoly expect;
        if (lam.size() >= 1) {
            PolyB lead2 = subleading(m, n).second;
            lead2 = substitute_beta_shift(lead2, conjugate(lam).length() - lam.length());
            expect = to_rat(-lead2);
        }
        c.expect(root_sum(lam) == expect, "root sum vs phi[d-2] at " + lam.to_string());

        // Sigma z = 2 I3 - 2 I1^2
        QkdvEigen e = qkdv_eigenvalues(lam);
        RatPoly viaI = (e.I3 - e.I1 * e.I1) * BigRat(2);
        c.expect(root_sum(lam) == viaI, "root sum vs I-combination at " + lam.to_string());
    });
    return ck.res;
}

SuiteResult suite_rootsum_sq(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "rootsum-sq";
    ck.res.conjectural = true;

    std::vector<Partition> lams = partitions_up_to(std::max<long>(opt.max_size, 8));
    parallel_each(lams, opt.jobs, ck, [&](const Partition& lam, Check& c) {
        // Remark identity: printed Sigma z^2 equals its I-combination (algebraic)
        QkdvEigen e = qkdv_eigenvalues(lam);
        RatPoly viaI = e.I5 * ratio(56, 3) - e.I3 * e.I1 * BigRat(40) +
                       e.I1 * e.I1 * e.I1 * ratio(64, 3) + e.I3 * BigRat(12) -
                       e.I1 * e.I1 * BigRat(12);
        c.expect(root_sum_sq(lam) == viaI, "Sigma z^2 vs I-combination at " + lam.to_string());

        // numeric confirmation of the conjectural closed form
        for (const char* bs : {"3/10", "-7/10", "5/3"}) {
            BigRat beta(bs);
            beta.canonicalize();
            RatPoly p = eval_beta(p_poly(lam), beta);
            cplx acc(0, 0);
            if (p.degree() >= 1)
                for (const auto& z : poly_roots(p).roots) acc += z * z;
            double expect = eval_at_rational(root_sum_sq(lam), beta).get_d();
            c.expect(std::abs(acc - expect) < 1e-6,
                     "numeric Sigma z^2 at " + lam.to_string() + ", beta=" + bs);
        }
    });
    return ck.res;
}

SuiteResult suite_spectra_zeros(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "spectra-zeros";
    std::vector<BigRat> betas = {ratio(3, 10), ratio(-7, 10), ratio(5, 3)};
    for (const auto& lam : partitions_up_to(std::min<long>(opt.max_size, 4))) {
        for (const auto& beta : betas) {
            for (int sign : {+1, -1}) {
                auto energies = spectrum(lam, sign, beta, 6);
                for (const auto& E : energies) {
                    SpectralValue q = q_eval(lam, sign, cplx(E.get_d(), 0.0), beta);
                    ck.expect(q.flag == SpecFlag::zero || std::abs(q.value) < 1e-10,
                              "Q zero at spectrum point, lam=" + lam.to_string());
                }
                // no spurious zeros: scan sign changes between consecutive points
                for (size_t k = 0; k + 1 < energies.size(); ++k) {
                    double lo = energies[k].get_d() + 1e-3, hi = energies[k + 1].get_d() - 1e-3;
                    int changes = 0;
                    double prev = 0;
                    bool first = true;
                    for (int t = 0; t <= 40; ++t) {
                        double E = lo + (hi - lo) * t / 40.0;
                        double v = q_eval(lam, sign, cplx(E, 0.0), beta).value.real();
                        if (!first && v * prev < 0) ++changes;
                        prev = v;
                        first = false;
                    }
                    ck.expect(changes == 0, "spurious interior zero, lam=" + lam.to_string());
                }
            }
        }
    }
    return ck.res;
}

SuiteResult suite_spectra_qq(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "spectra-qq";
    const double tol = std::min(opt.tol, 1e-9);
    std::vector<BigRat> betas = {ratio(3, 10), ratio(-7, 10), ratio(5, 3)};
    constexpr double kPi = 3.14159265358979323846;

    for (const auto& lam : partitions_up_to(std::min<long>(opt.max_size, 4))) {
        Partition cj = conjugate(lam);
        for (const auto& beta : betas) {
            double b = beta.get_d();
            for (int t = 0; t < 9; ++t) {
                cplx E(-2.0 + 0.5 * t, 0.0);
                ck.expect(qq_residual(lam, beta, E) < tol,
                          "QQ residual, lam=" + lam.to_string());
                // T = Q+ Q- sin(pi beta)/(pi beta); the printed lemma omits the pi
                cplx lhs = stokes_t(lam, E, beta).value;
                cplx rhs = q_eval(lam, +1, E, beta).value * q_eval(lam, -1, E, beta).value *
                           std::sin(kPi * b) / (kPi * b);
                ck.expect(std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(lhs)),
                          "T = Q+Q- sin(pi beta)/(pi beta), lam=" + lam.to_string());
                // T invariance under (lam, beta) -> (lam', -beta)
                cplx sw = stokes_t(cj, E, -beta).value;
                ck.expect(std::abs(lhs - sw) <= 1e-10 * std::max(1.0, std::abs(lhs)),
                          "T symmetry, lam=" + lam.to_string());
            }
        }
        // beta -> 0: T finite, and matches the sin(pi beta)/(pi beta) -> 1 limit
        cplx t0 = stokes_t(lam, cplx(0.7, 0.0), ratio(1, 1000000)).value;
        ck.expect(std::isfinite(t0.real()) && std::isfinite(t0.imag()), "T finite near beta=0");
    }

    // integer beta is rejected for the QQ residual
    bool thrown = false;
    try {
        qq_residual(Partition(), BigRat(2), cplx(1.0, 0.0));
    } catch (const MomentumExcluded&) {
        thrown = true;
    }
    ck.expect(thrown, "integer beta must raise MomentumExcluded");
    return ck.res;
}

SuiteResult suite_spectra_count(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "spectra-count";
    const long cap = std::max<long>(opt.max_size, 10);
    for (long n = 0; n <= cap; ++n) {
        long pn = partition_count(n);
        ck.expect(count_blz(n, ratio(1, 2)) == pn, "count at non-integer beta, n=" + std::to_string(n));
        auto cs = c_set(n);
        for (long b = -2 * n - 2; b <= 2 * n + 2; ++b) {
            long cnt = count_blz(n, BigRat(b));
            if (cs.count(b))
                ck.expect(cnt < pn, "count must drop inside C_n, n=" + std::to_string(n));
            else
                ck.expect(cnt == pn, "count must equal p(n) outside C_n, n=" + std::to_string(n));
        }
    }
    // beta = 0 counts self-conjugate partitions
    for (long n = 0; n <= std::max<long>(cap, 12); ++n) {
        long selfconj = 0;
        for_each_partition(n, [&](const Partition& lam) {
            if (lam == conjugate(lam)) ++selfconj;
        });
        ck.expect(count_blz(n, BigRat(0)) == selfconj,
                  "self-conjugate count at n=" + std::to_string(n));
    }
    return ck.res;
}

SuiteResult suite_verma(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "verma";
    for (long n = 0; n <= std::max<long>(opt.max_size, 12); ++n) {
        auto cs = c_set(n);
        for (long b = -2 * n - 2; b <= 2 * n + 2; ++b)
            ck.expect(in_a_set(n, BigRat(b)) == (cs.count(b) > 0),
                      "A_n = C_n at n=" + std::to_string(n) + ", beta=" + std::to_string(b));
        ck.expect(!in_a_set(n, ratio(1, 2)), "non-integer beta is never in A_n");
    }
    for (long n = 0; n <= std::min<long>(std::max<long>(opt.max_size, 8), 8); ++n)
        for (long b = -8; b <= 8; ++b) {
            VermaReport rep = verma_report(n, BigRat(b));
            ck.expect((rep.blz_count == rep.p_n) == rep.irreducible_in_degree,
                      "count = p(n) iff irreducible, n=" + std::to_string(n));
        }
    return ck.res;
}

SuiteResult suite_qkdv_virasoro(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "qkdv-virasoro";
    const int N = static_cast<int>(std::clamp<long>(opt.max_size, 4, 10));
    FockSpace sp(N);

    // [L_m, L_n] = (m-n) L_{m+n} - delta_{m+n,0} (m^3-m)/6 on safe blocks
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            int safe = N - std::max(std::abs(m), std::abs(n));
            for (int d = 0; d <= safe; ++d)
                for (int idx : sp.degree_block(d)) {
                    FockVector v = fock_basis(sp, idx);
                    FockVector lhs = apply_virasoro(m, apply_virasoro(n, v)) -
                                     apply_virasoro(n, apply_virasoro(m, v));
                    FockVector rhs = apply_virasoro(m + n, v).scaled(RatPoly(BigRat(m - n)));
                    if (m + n == 0) {
                        long c3 = (static_cast<long>(m) * m * m - m) / 6;
                        rhs = rhs - v.scaled(RatPoly(BigRat(c3)));
                    }
                    ck.expect((lhs - rhs).is_zero(),
                              "Virasoro bracket [" + std::to_string(m) + "," + std::to_string(n) +
                                  "] at degree " + std::to_string(d));
                }
        }

    // Schur basis: p(n) vectors per degree, linearly independent
    for (int n = 0; n <= N; ++n) {
        std::vector<FockVector> vecs;
        for_each_partition(n, [&](const Partition& lam) { vecs.push_back(schur_vector(sp, lam)); });
        ck.expect(static_cast<long>(vecs.size()) == pentagonal_p(n), "Schur count at degree " +
                                                                        std::to_string(n));
        const auto& block = sp.degree_block(n);
        std::vector<std::vector<BigRat>> mat;
        for (const auto& v : vecs) {
            std::vector<BigRat> row;
            for (int idx : block) {
                const RatPoly& c = v.coef[static_cast<size_t>(idx)];
                row.push_back(c.zero() ? BigRat(0) : c.coeff(0));
            }
            mat.push_back(row);
        }
        // exact rank by Gaussian elimination
        size_t rank = 0;
        for (size_t col = 0; col < block.size() && rank < mat.size(); ++col) {
            size_t piv = rank;
            while (piv < mat.size() && sgn(mat[piv][col]) == 0) ++piv;
            if (piv == mat.size()) continue;
            std::swap(mat[piv], mat[rank]);
            for (size_t i = 0; i < mat.size(); ++i) {
                if (i == rank || sgn(mat[i][col]) == 0) continue;
                BigRat f = mat[i][col] / mat[rank][col];
                for (size_t j = col; j < block.size(); ++j) mat[i][j] -= f * mat[rank][j];
            }
            ++rank;
        }
        ck.expect(rank == vecs.size(), "Schur independence at degree " + std::to_string(n));
    }
    return ck.res;
}

SuiteResult suite_qkdv_diag(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "qkdv-diag";
    const int N = static_cast<int>(std::clamp<long>(opt.max_size, 2, 10));
    FockSpace sp(N);

    std::vector<Partition> lams = partitions_up_to(N);
    parallel_each(lams, opt.jobs, ck, [&](const Partition& lam, Check& c) {
        FockVector s = schur_vector(sp, lam);
        QkdvEigen e = qkdv_eigenvalues(lam);
        c.expect((apply_i_operator(1, s) - s.scaled(e.I1)).is_zero(),
                 "I1 eigenvalue at " + lam.to_string());
        c.expect((apply_i_operator(3, s) - s.scaled(e.I3)).is_zero(),
                 "I3 eigenvalue at " + lam.to_string());
        c.expect((apply_i_operator(5, s) - s.scaled(e.I5)).is_zero(),
                 "I5 eigenvalue at " + lam.to_string());
        for (int k = 1; k <= 6; ++k) {
            FockVector av = apply_residue(a_operator_expr(k), s);
            c.expect((av - s.scaled(RatPoly(pk(lam, k)))).is_zero(),
                     "A_" + std::to_string(k) + " eigenvalue at " + lam.to_string());
        }
    });

    // pairwise commutation of the hamiltonians per degree block
    const int Nc = std::min(N, 6);
    FockSpace spc(Nc);
    for (int d = 0; d <= Nc; ++d)
        for (int idx : spc.degree_block(d)) {
            FockVector v = fock_basis(spc, idx);
            FockVector ab = apply_i_operator(3, apply_i_operator(5, v));
            FockVector ba = apply_i_operator(5, apply_i_operator(3, v));
            ck.expect((ab - ba).is_zero(), "[I3, I5] = 0 at degree " + std::to_string(d));
        }
    return ck.res;
}

SuiteResult suite_qkdv_identity(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "qkdv-identity";
    // capped at 6: the six-factor mode sums grow steeply with the truncation
    const int N = static_cast<int>(std::clamp<long>(opt.max_size, 3, 6));
    IdentityReport rep = hamiltonian_identity_check(N);
    ck.expect(rep.corrected_match[0], "I1 mode sum vs differential polynomial");
    ck.expect(rep.corrected_match[1], "I3 mode sum vs corrected differential polynomial");
    ck.expect(rep.corrected_match[2], "I5 mode sum vs corrected differential polynomial");
    ck.expect(rep.printed_match[0], "I1 printed form");
    // The printed I3/I5 polynomials are expected to disagree (beta^2 bracket);
    // their failure is the reported transcription discrepancy, not a bug here.
    ck.expect(!rep.printed_match[1] && !rep.printed_match[2],
              "printed forms unexpectedly matched; transcription note is stale");
    ck.expect(rep.note.find("does not match its A-combination") == std::string::npos,
              "I_k vs A-combination: " + rep.note);
    if (ck.res.pass) ck.res.detail = rep.note;
    return ck.res;
}

SuiteResult suite_numeric_roots(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "numeric-roots";
    const double tol = std::min(opt.tol, 1e-7);
    std::vector<BigRat> betas = {ratio(3, 10), ratio(-7, 10), ratio(5, 3)};

    {
        RatPoly p;  // (z-1)(z-2) = z^2 - 3z + 2
        p.c = {BigRat(2), BigRat(-3), BigRat(1)};
        RootSet rs = poly_roots(p);
        ck.expect(std::abs(rs.roots[0] - cplx(1, 0)) < 1e-10 &&
                      std::abs(rs.roots[1] - cplx(2, 0)) < 1e-10,
                  "roots of (z-1)(z-2)");
    }

    std::vector<Partition> lams = partitions_up_to(std::min<long>(opt.max_size, 6));
    parallel_each(lams, opt.jobs, ck, [&](const Partition& lam, Check& c) {
        if (lam.size() == 0) return;
        for (const auto& beta : betas) {
            RatPoly p = eval_beta(p_poly(lam), beta);
            RootSet rs = poly_roots(p);

            // re-expansion reproduces the coefficients
            std::vector<cplx> coeffs{cplx(1.0, 0.0)};
            for (const auto& z : rs.roots) {
                std::vector<cplx> next(coeffs.size() + 1);
                for (size_t i = 0; i < coeffs.size(); ++i) {
                    next[i + 1] += coeffs[i];
                    next[i] -= z * coeffs[i];
                }
                coeffs = next;
            }
            double scale = 1.0, err = 0.0;
            for (int k = 0; k <= p.degree(); ++k)
                scale = std::max(scale, std::abs(p.coeff(k).get_d()));
            for (int k = 0; k <= p.degree(); ++k)
                err = std::max(err, std::abs(coeffs[static_cast<size_t>(k)] -
                                             cplx(p.coeff(k).get_d(), 0)));
            c.expect(err / scale < 1e-9, "re-expansion at " + lam.to_string());

            c.expect(blz_residual(rs.roots, beta) < tol, "BLZ residual at " + lam.to_string());

            // quartic roots of the z's satisfy the Calogero-Moser condition
            const cplx rot[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            std::vector<cplx> poles;
            for (const auto& z : rs.roots) {
                cplx x = std::pow(z, 0.25);
                for (const auto& r4 : rot) poles.push_back(x * r4);
            }
            c.expect(calogero_residual(poles, beta) < std::max(tol, 1e-7),
                     "Calogero-Moser residual at " + lam.to_string());

            cplx sum(0, 0);
            for (const auto& z : rs.roots) sum += z;
            double expect = eval_at_rational(root_sum(lam), beta).get_d();
            c.expect(std::abs(sum - expect) < 1e-9, "numeric root sum at " + lam.to_string());
        }
    });
    return ck.res;
}

SuiteResult suite_numeric_newton(const VerifyOptions& opt) {
    Check ck;
    ck.res.name = "numeric-newton";
    std::vector<BigRat> betas = {ratio(3, 10), ratio(5, 3)};
    std::vector<Partition> lams = partitions_up_to(std::min<long>(opt.max_size, 6));
    parallel_each(lams, opt.jobs, ck, [&](const Partition& lam, Check& c) {
        for (const auto& beta : betas) {
            NewtonReport rep = newton_check(lam, beta);
            c.expect(rep.err_sum < 1e-8, "Sigma z vs closed form at " + lam.to_string());
            c.expect(rep.err_sum_from_I < 1e-8, "Sigma z vs 2I3-2I1^2 at " + lam.to_string());
            c.expect(rep.err_sumsq_from_I < 1e-6,
                     "Sigma z^2 vs I-combination at " + lam.to_string());
        }
    });
    return ck.res;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"partitions",      "exactalg",        "wronskian-structure", "wronskian-padding",
            "wronskian-symmetry", "constant-term", "subleading",          "hermite",
            "coalescence",     "bset",            "shiftsym",            "rootsum",
            "rootsum-sq",      "spectra-zeros",   "spectra-qq",          "spectra-count",
            "verma",           "qkdv-virasoro",   "qkdv-diag",           "qkdv-identity",
            "numeric-roots",   "numeric-newton"};
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "partitions") return suite_partitions(opt);
    if (name == "exactalg") return suite_exactalg(opt);
    if (name == "wronskian-structure") return suite_wronskian_structure(opt);
    if (name == "wronskian-padding") return suite_wronskian_padding(opt);
    if (name == "wronskian-symmetry") return suite_wronskian_symmetry(opt);
    if (name == "constant-term") return suite_constant_term(opt);
    if (name == "subleading") return suite_subleading(opt);
    if (name == "hermite") return suite_hermite(opt);
    if (name == "coalescence") return suite_coalescence(opt);
    if (name == "bset") return suite_bset(opt);
    if (name == "shiftsym") return suite_shiftsym(opt);
    if (name == "rootsum") return suite_rootsum(opt);
    if (name == "rootsum-sq") return suite_rootsum_sq(opt);
    if (name == "spectra-zeros") return suite_spectra_zeros(opt);
    if (name == "spectra-qq") return suite_spectra_qq(opt);
    if (name == "spectra-count") return suite_spectra_count(opt);
    if (name == "verma") return suite_verma(opt);
    if (name == "qkdv-virasoro") return suite_qkdv_virasoro(opt);
    if (name == "qkdv-diag") return suite_qkdv_diag(opt);
    if (name == "qkdv-identity") return suite_qkdv_identity(opt);
    if (name == "numeric-roots") return suite_numeric_roots(opt);
    if (name == "numeric-newton") return suite_numeric_newton(opt);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
    return out;
}

}  // namespace lw
