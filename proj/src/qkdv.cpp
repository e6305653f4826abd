#include "lw/qkdv.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace lw {

namespace {
RatPoly rp(long num, long den) { return RatPoly(ratio(num, den)); }

RatPoly h0_poly() {  // (beta^2 - 1)/8
    RatPoly b = RatPoly::var();
    return (b * b - RatPoly(BigRat(1))) * ratio(1, 8);
}
}  // namespace

FockSpace::FockSpace(int N) : N_(N) {
    if (N < 0 || N > 30) throw std::invalid_argument("unsupported truncation");
    // enumerate exponent vectors by total weighted degree, lexicographic within
    std::vector<int> expo(static_cast<size_t>(N), 0);
    blocks_.resize(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        std::function<void(int, int)> rec = [&](int slot, int rem) {
            if (rem == 0) {
                int idx = static_cast<int>(monos_.size());
                monos_.push_back(expo);
                degrees_.push_back(n);
                blocks_[static_cast<size_t>(n)].push_back(idx);
                index_[expo] = idx;
                return;
            }
            if (slot >= N) return;
            const int w = slot + 1;
            for (int e = rem / w; e >= 0; --e) {
                expo[static_cast<size_t>(slot)] = e;
                rec(slot + 1, rem - e * w);
            }
            expo[static_cast<size_t>(slot)] = 0;
        };
        rec(0, n);
    }
}

int FockSpace::index_of(const std::vector<int>& expo) const {
    auto it = index_.find(expo);
    return it == index_.end() ? -1 : it->second;
}

bool FockVector::is_zero() const {
    for (const auto& c : coef)
        if (!c.zero()) return false;
    return true;
}

FockVector operator+(FockVector a, const FockVector& b) {
    for (size_t i = 0; i < a.coef.size(); ++i) a.coef[i] = a.coef[i] + b.coef[i];
    return a;
}
FockVector operator-(FockVector a, const FockVector& b) {
    for (size_t i = 0; i < a.coef.size(); ++i) a.coef[i] = a.coef[i] - b.coef[i];
    return a;
}
FockVector FockVector::scaled(const RatPoly& s) const {
    FockVector r(*space);
    for (size_t i = 0; i < coef.size(); ++i) r.coef[i] = coef[i] * s;
    return r;
}

FockVector fock_one(const FockSpace& sp) {
    FockVector v(sp);
    v.coef[0] = RatPoly(BigRat(1));
    return v;
}
FockVector fock_basis(const FockSpace& sp, int idx) {
    FockVector v(sp);
    v.coef[static_cast<size_t>(idx)] = RatPoly(BigRat(1));
    return v;
}

FockVector fock_mul(const FockVector& a, const FockVector& b) {
    const FockSpace& sp = *a.space;
    FockVector r(sp);
    for (int i = 0; i < sp.dim(); ++i) {
        if (a.coef[static_cast<size_t>(i)].zero()) continue;
        for (int j = 0; j < sp.dim(); ++j) {
            if (b.coef[static_cast<size_t>(j)].zero()) continue;
            if (sp.degree_of(i) + sp.degree_of(j) > sp.truncation()) continue;
            std::vector<int> e = sp.exponents(i);
            const auto& f = sp.exponents(j);
            for (size_t t = 0; t < e.size(); ++t) e[t] += f[t];
            int idx = sp.index_of(e);
            if (idx < 0) continue;
            r.coef[static_cast<size_t>(idx)] =
                r.coef[static_cast<size_t>(idx)] +
                a.coef[static_cast<size_t>(i)] * b.coef[static_cast<size_t>(j)];
        }
    }
    return r;
}

FockVector apply_mode(long a, const FockVector& v) {
    const FockSpace& sp = *v.space;
    FockVector r(sp);
    if (a == 0) return r;
    for (int i = 0; i < sp.dim(); ++i) {
        const RatPoly& c = v.coef[static_cast<size_t>(i)];
        if (c.zero()) continue;
        std::vector<int> e = sp.exponents(i);
        if (a < 0) {
            long n = -a;
            if (n > sp.truncation()) continue;
            e[static_cast<size_t>(n - 1)] += 1;
            int idx = sp.index_of(e);
            if (idx < 0) continue;  // leaves the truncation
            r.coef[static_cast<size_t>(idx)] = r.coef[static_cast<size_t>(idx)] + c;
        } else {
            if (a > sp.truncation()) continue;
            int& cnt = e[static_cast<size_t>(a - 1)];
            if (cnt == 0) continue;
            long factor = a * cnt;
            cnt -= 1;
            int idx = sp.index_of(e);
            r.coef[static_cast<size_t>(idx)] =
                r.coef[static_cast<size_t>(idx)] + c * BigRat(factor);
        }
    }
    return r;
}

FockVector schur_vector(const FockSpace& sp, const Partition& lam) {
    if (lam.size() > sp.truncation()) throw std::domain_error("partition exceeds the truncation");
    const int ell = lam.length();
    // complete homogeneous h_i from i h_i = sum_j q_j h_{i-j}
    std::vector<FockVector> h;
    h.push_back(fock_one(sp));
    for (long i = 1; i <= lam.part(1) + ell - 1 && i <= sp.truncation(); ++i) {
        FockVector acc(sp);
        for (long j = 1; j <= i; ++j) acc = acc + apply_mode(-j, h[static_cast<size_t>(i - j)]);
        h.push_back(acc.scaled(RatPoly(ratio(1, i))));
    }
    auto h_at = [&](long i) -> FockVector {
        if (i < 0) return FockVector(sp);
        if (i >= static_cast<long>(h.size())) throw std::logic_error("h index out of range");
        return h[static_cast<size_t>(i)];
    };
    if (ell == 0) return fock_one(sp);

    // determinant of (h_{lam_i - i + j}) by Laplace expansion with a
    // column-subset memo
    std::vector<FockVector> memo(1u << ell, FockVector(sp));
    std::vector<bool> seen(1u << ell, false);
    std::function<FockVector(unsigned)> det = [&](unsigned mask) -> FockVector {
        if (mask == 0) return fock_one(sp);
        if (seen[mask]) return memo[mask];
        int row = ell - __builtin_popcount(mask) + 1;  // 1-based
        FockVector acc(sp);
        int pos = 0;
        for (int j = 1; j <= ell; ++j) {
            if (!(mask & (1u << (j - 1)))) continue;
            FockVector entry = h_at(lam.part(row) - row + j);
            if (!entry.is_zero()) {
                FockVector sub = det(mask & ~(1u << (j - 1)));
                FockVector prod = fock_mul(entry, sub);
                acc = (pos % 2 == 0) ? acc + prod : acc - prod;
            }
            ++pos;
        }
        seen[mask] = true;
        memo[mask] = acc;
        return acc;
    };
    return det((1u << ell) - 1);
}

FockVector apply_virasoro(long m, const FockVector& v) {
    const FockSpace& sp = *v.space;
    const long N = sp.truncation();
    FockVector r(sp);
    if (m == 0) r = r + v.scaled(h0_poly());
    if (m != 0 && std::labs(m) <= N) {
        RatPoly lin = (RatPoly::var() + RatPoly(BigRat(m))) * ratio(1, 2);  // (beta+m)/2
        r = r + apply_mode(m, v).scaled(lin);
    }
    for (long a = -N; a <= N; ++a) {
        if (a == 0) continue;
        long b = m - a;
        if (b == 0 || std::labs(b) > N) continue;
        // :u_a u_b: = creation then annihilation, applied right-to-left
        long first = std::max(a, b), second = std::min(a, b);  // annihilator first
        FockVector w = apply_mode(second, apply_mode(first, v));
        r = r + w.scaled(rp(1, 2));
    }
    return r;
}

FockVector apply_i_operator(int k, const FockVector& v) {
    const FockSpace& sp = *v.space;
    const long N = sp.truncation();
    auto L = [&](long m, const FockVector& x) { return apply_virasoro(m, x); };
    if (k == 1) return L(0, v);
    if (k == 3) {
        FockVector r = L(0, L(0, v));
        for (long n = 1; n <= N; ++n) {
            FockVector t = L(-n, L(n, v));
            r = r + t + t;
        }
        return r;
    }
    if (k == 5) {
        FockVector r = L(0, L(0, L(0, v)));
        FockVector acc(sp);
        for (long m = 1; m <= N; ++m)
            for (long n = 1; m + n <= N; ++n) {
                acc = acc + L(-m, L(-n, L(m + n, v)));
                acc = acc + L(-m - n, L(m, L(n, v)));
            }
        for (long n = 1; n <= N; ++n) {
            acc = acc + L(0, L(-n, L(n, v)));
            acc = acc + L(-n, L(0, L(n, v)));
        }
        return r + acc.scaled(RatPoly(BigRat(3)));
    }
    throw std::invalid_argument("I_k only defined for k = 1, 3, 5");
}

namespace {

// Sum over distinct arrangements of `values` into the slots of `ls` of the
// product of value^ls[slot]; values are the signed mode indices.
long arrangement_sum(const std::vector<int>& ls, std::vector<long>& values, size_t slot) {
    if (slot == ls.size()) return 1;
    long acc = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0 && values[i] == values[i - 1]) continue;  // dedupe
        long val = values[i];
        long w = 1;
        for (int t = 0; t < ls[slot]; ++t) w *= val;
        std::vector<long> rest = values;
        rest.erase(rest.begin() + static_cast<long>(i));
        acc += w * arrangement_sum(ls, rest, slot + 1);
    }
    return acc;
}

struct WeightedMultiset {
    std::vector<long> ann;  // positive modes, ascending
    std::vector<long> cre;  // negative modes (stored as positive n for q_n)
    long weight = 0;
};

// All multisets of j nonzero modes in [-N, N] with zero sum, with the
// arrangement-sum weight for the given l-pattern.
std::vector<WeightedMultiset> build_multisets_uncached(const std::vector<int>& ls, long N) {
    std::vector<WeightedMultiset> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long minval, long sum) {
        if (cur.size() == ls.size()) {
            if (sum != 0) return;
            std::vector<long> sorted = cur;
            long w = arrangement_sum(ls, sorted, 0);
            if (w == 0) return;
            WeightedMultiset ws;
            ws.weight = w;
            for (long v : cur)
                (v > 0 ? ws.ann : ws.cre).push_back(v > 0 ? v : -v);
            std::sort(ws.ann.begin(), ws.ann.end());
            std::sort(ws.cre.begin(), ws.cre.end());
            out.push_back(std::move(ws));
            return;
        }
        long rem2 = static_cast<long>(ls.size() - cur.size()) - 1;  // slots after this one
        for (long v = minval; v <= N; ++v) {
            if (v == 0) continue;
            // future entries lie in [v, N] (ascending enumeration)
            if (sum + v + rem2 * v > 0) break;      // minimum overshoots zero
            if (sum + v + rem2 * N < 0) continue;   // maximum cannot reach zero
            cur.push_back(v);
            rec(v, sum + v);
            cur.pop_back();
        }
    };
    rec(-N, 0);
    return out;
}

std::mutex multiset_cache_mutex;

const std::vector<WeightedMultiset>& build_multisets(const std::vector<int>& ls, long N) {
    static std::map<std::pair<std::vector<int>, long>, std::vector<WeightedMultiset>> cache;
    auto key = std::make_pair(ls, N);
    std::lock_guard<std::mutex> lock(multiset_cache_mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_multisets_uncached(ls, N)).first;
    return it->second;
}

}  // namespace

FockVector apply_residue(const UExpr& expr, const FockVector& v) {
    const FockSpace& sp = *v.space;
    const long N = sp.truncation();
    FockVector r(sp);
    for (const auto& term : expr) {
        if (term.ls.empty()) {
            r = r + v.scaled(term.coeff);
            continue;
        }
        const auto& multisets = build_multisets(term.ls, N);
        FockVector acc(sp);
        for (const auto& ws : multisets) {
            FockVector w = v;
            for (long p : ws.ann) {
                w = apply_mode(p, w);
                if (w.is_zero()) break;
            }
            if (w.is_zero()) continue;
            for (long n : ws.cre) w = apply_mode(-n, w);
            acc = acc + w.scaled(RatPoly(BigRat(ws.weight)));
        }
        r = r + acc.scaled(term.coeff);
    }
    return r;
}

FockVector FockOp::apply(const FockVector& v) const {
    FockVector r(*space);
    for (size_t j = 0; j < cols.size(); ++j) {
        const RatPoly& c = v.coef[j];
        if (c.zero()) continue;
        for (const auto& [row, val] : cols[j])
            r.coef[static_cast<size_t>(row)] = r.coef[static_cast<size_t>(row)] + val * c;
    }
    return r;
}

namespace {
FockOp matrix_from(const FockSpace& sp, const std::function<FockVector(const FockVector&)>& f) {
    FockOp op;
    op.space = &sp;
    op.cols.resize(static_cast<size_t>(sp.dim()));
    for (int j = 0; j < sp.dim(); ++j) {
        FockVector col = f(fock_basis(sp, j));
        for (int i = 0; i < sp.dim(); ++i)
            if (!col.coef[static_cast<size_t>(i)].zero())
                op.cols[static_cast<size_t>(j)].emplace_back(i, col.coef[static_cast<size_t>(i)]);
    }
    return op;
}
}  // namespace

FockOp residue_matrix(const FockSpace& sp, const UExpr& expr) {
    return matrix_from(sp, [&](const FockVector& v) { return apply_residue(expr, v); });
}

FockOp i_operator_matrix(const FockSpace& sp, int k) {
    return matrix_from(sp, [&](const FockVector& v) { return apply_i_operator(k, v); });
}

UExpr a_operator_expr(int k) {
    switch (k) {
        case 1:
            return {};
        case 2:
            return {{rp(1, 2), {0, 0}}};
        case 3:
            return {{rp(1, 3), {0, 0, 0}}};
        case 4:
            return {{rp(1, 4), {0, 0, 0, 0}}, {rp(-1, 4), {1, 1}}, {rp(-1, 8), {0, 0}}};
        case 5:
            return {{rp(1, 5), {0, 0, 0, 0, 0}}, {rp(1, 2), {0, 0, 2}}, {rp(-1, 6), {0, 0, 0}}};
        case 6:
            return {{rp(1, 6), {0, 0, 0, 0, 0, 0}},
                    {rp(-5, 24), {0, 0, 0, 0}},
                    {rp(-5, 2), {0, 0, 1, 1}},
                    {rp(7, 96), {0, 0}},
                    {rp(5, 24), {1, 1}},
                    {rp(1, 6), {2, 2}}};
        default:
            throw std::invalid_argument("A_k only printed for k <= 6");
    }
}

namespace {
UExpr i_expr(int k, bool printed) {
    const RatPoly beta = RatPoly::var();
    const RatPoly h0 = h0_poly();
    const RatPoly b2 = beta * beta;
    if (k == 1) return {{h0, {}}, {rp(1, 2), {0, 0}}};
    if (k == 3) {
        RatPoly u2coef = b2 * (printed ? ratio(3, 4) : ratio(3, 8)) - rp(1, 8);
        return {{h0 * h0, {}},
                {u2coef, {0, 0}},
                {beta * ratio(1, 2), {0, 0, 0}},
                {rp(1, 4), {0, 0, 0, 0}},
                {rp(1, 4), {0, 2}}};
    }
    if (k == 5) {
        long den = printed ? 32 : 64;  // the beta^2 bracket
        RatPoly u2coef = b2 * b2 * ratio(15, 128) - b2 * ratio(9, den) + rp(3, 128);
        RatPoly u3coef = b2 * beta * ratio(5, 16) - beta * ratio(3, 16);
        RatPoly u4coef = b2 * ratio(30, den) - rp(12, 128);
        RatPoly uu2coef = b2 * ratio(30, den);
        return {{h0 * h0 * h0, {}},
                {u2coef, {0, 0}},
                {u3coef, {0, 0, 0}},
                {u4coef, {0, 0, 0, 0}},
                {uu2coef, {0, 2}},
                {beta * ratio(6, 16), {0, 0, 0, 0, 0}},
                {beta * ratio(15, 16), {0, 0, 2}},
                {rp(16, 128), {0, 0, 0, 0, 0, 0}},
                {rp(-240, 128), {0, 0, 1, 1}},
                {rp(12, 128), {1, 1}},
                {rp(16, 128), {2, 2}}};
    }
    throw std::invalid_argument("I_k only defined for k = 1, 3, 5");
}

FockOp combo(const FockSpace& sp, std::vector<std::pair<RatPoly, const FockOp*>> parts,
             const RatPoly& identity_coeff) {
    return [&]() {
        FockOp out;
        out.space = &sp;
        out.cols.resize(static_cast<size_t>(sp.dim()));
        for (int j = 0; j < sp.dim(); ++j) {
            FockVector col(sp);
            col.coef[static_cast<size_t>(j)] = identity_coeff;
            FockVector basis = fock_basis(sp, j);
            for (const auto& [c, op] : parts) col = col + op->apply(basis).scaled(c);
            for (int i = 0; i < sp.dim(); ++i)
                if (!col.coef[static_cast<size_t>(i)].zero())
                    out.cols[static_cast<size_t>(j)].emplace_back(i,
                                                                  col.coef[static_cast<size_t>(i)]);
        }
        return out;
    }();
}
}  // namespace

UExpr i_expr_printed(int k) { return i_expr(k, true); }
UExpr i_expr_corrected(int k) { return i_expr(k, false); }

IdentityReport hamiltonian_identity_check(int N) {
    FockSpace sp(N);
    IdentityReport rep;
    const RatPoly beta = RatPoly::var();
    const RatPoly h0 = h0_poly();
    const RatPoly b2 = beta * beta;

    FockOp a2 = residue_matrix(sp, a_operator_expr(2));
    FockOp a3 = residue_matrix(sp, a_operator_expr(3));
    FockOp a4 = residue_matrix(sp, a_operator_expr(4));
    FockOp a5 = residue_matrix(sp, a_operator_expr(5));
    FockOp a6 = residue_matrix(sp, a_operator_expr(6));

    const int ks[3] = {1, 3, 5};
    for (int t = 0; t < 3; ++t) {
        FockOp mode = i_operator_matrix(sp, ks[t]);
        rep.printed_match[t] = (residue_matrix(sp, i_expr_printed(ks[t])) == mode);
        rep.corrected_match[t] = (residue_matrix(sp, i_expr_corrected(ks[t])) == mode);

        // the same operators as polynomial combinations of A_2..A_6
        FockOp viaA;
        if (ks[t] == 1) {
            viaA = combo(sp, {{RatPoly(BigRat(1)), &a2}}, h0);
        } else if (ks[t] == 3) {
            viaA = combo(sp,
                         {{b2 * ratio(3, 4), &a2}, {beta * ratio(3, 2), &a3},
                          {RatPoly(BigRat(1)), &a4}},
                         h0 * h0);
        } else {
            viaA = combo(sp,
                         {{b2 * b2 * ratio(15, 64) + b2 * ratio(3, 16), &a2},
                          {b2 * beta * ratio(15, 16) + beta * ratio(3, 8), &a3},
                          {b2 * ratio(15, 8) + rp(1, 4), &a4},
                          {beta * ratio(15, 8), &a5},
                          {rp(3, 4), &a6}},
                         h0 * h0 * h0);
        }
        if (!(viaA == mode)) {
            rep.note += "I_" + std::to_string(ks[t]) + " does not match its A-combination; ";
        }
    }
    rep.note += "printed I_3/I_5 differential polynomials differ from the mode sums exactly in "
                "the beta^2 bracket (factor 2); corrected forms match exactly.";
    return rep;
}

}  // namespace lw
