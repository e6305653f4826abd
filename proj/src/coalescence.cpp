#include "lw/coalescence.hpp"

#include <algorithm>

#include "lw/wronskian.hpp"

namespace lw {

bool is_reduced(const Triple& t) {
    if (t.beta.get_den() != 1) return true;  // non-integer beta is always reduced
    return sgn(eval_at_rational(constant_term_hooks(t.lam, t.mu), t.beta)) != 0;
}

std::vector<CoalescenceEdge> coalescence_edges(const Triple& t) {
    std::vector<CoalescenceEdge> out;
    if (t.beta.get_den() != 1) return out;
    const long beta = mpz_get_si(t.beta.get_num().get_mpz_t());

    Partition big = from_core_quotient(0, t.lam, t.mu);
    for (const auto& oc : odd_hook_cells(big)) {
        // the factor (h/2 + sign (1/2 + beta)) vanishes at beta = -1/2 - sign h/2
        long root = (-oc.sign * oc.hook - 1) / 2;
        if (root != beta) continue;
        Partition smaller = remove_border_strip(big, oc.cell);
        CoreQuotient cq = two_core_quotient(smaller);
        long beta_t = beta + (beta >= 0 ? 2 : -2);
        out.push_back({oc.cell, Triple{BigRat(beta_t), cq.lam, cq.mu}});
    }
    // deterministic order: row-major cells
    std::sort(out.begin(), out.end(), [](const CoalescenceEdge& a, const CoalescenceEdge& b) {
        return std::pair(a.cell.i, a.cell.j) < std::pair(b.cell.i, b.cell.j);
    });
    return out;
}

std::pair<Triple, long> reduce(const Triple& t) {
    Triple cur = t;
    const long start = cur.lam.size() + cur.mu.size();
    for (;;) {
        auto edges = coalescence_edges(cur);
        if (edges.empty()) break;
        cur = edges.front().target;  // any edge leads to the same reduced triple
    }
    return {cur, start - cur.lam.size() - cur.mu.size()};
}

std::set<long> b_set(long n) {
    std::set<long> out;
    for_each_partition(n, [&](const Partition& lam) {
        PolyB ct = constant_term_hooks(lam, conjugate(lam));
        for (long b = -2 * n - 1; b <= 2 * n + 1; ++b)
            if (sgn(eval_at_rational(ct, BigRat(b))) == 0) out.insert(b);
    });
    return out;
}

std::set<long> c_set(long n) {
    std::set<long> out;
    for (long b = -(2 * n - 1); b <= 2 * n - 1; ++b)
        if ((b % 2 + 2) % 2 == 1) out.insert(b);
    for (long b = -(n - 2); b <= n - 2; ++b)
        if (b % 2 == 0) out.insert(b);
    return out;
}

}  // namespace lw
