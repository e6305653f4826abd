#include "lw/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lw {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw std::invalid_argument("not weakly decreasing positive parts");
    }
}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::vector<long> parts;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad partition part: " + tok);
        parts.push_back(v);
    }
    return Partition(parts);
}

Partition conjugate(const Partition& p) {
    std::vector<long> out;
    long cols = p.part(1);
    out.reserve(static_cast<size_t>(cols));
    for (long j = 1; j <= cols; ++j) {
        long cnt = 0;
        for (long x : p.parts())
            if (x >= j) ++cnt;
        out.push_back(cnt);
    }
    return Partition(out);
}

bool cell_valid(const Partition& p, Cell c) {
    return c.i >= 1 && c.j >= 1 && c.j <= p.part(c.i);
}

long hook_length(const Partition& p, Cell c) {
    if (!cell_valid(p, c)) throw std::domain_error("cell outside the diagram");
    Partition q = conjugate(p);
    return p.part(c.i) - c.i + q.part(c.j) - c.j + 1;
}

std::vector<OddHookCell> odd_hook_cells(const Partition& p) {
    std::vector<OddHookCell> out;
    Partition q = conjugate(p);
    for (int i = 1; i <= p.length(); ++i) {
        int sign = ((p.part(i) - i) % 2 + 2) % 2 == 0 ? 1 : -1;
        for (int j = 1; j <= p.part(i); ++j) {
            long h = p.part(i) - i + q.part(j) - j + 1;
            if (h % 2 != 0) out.push_back({{i, j}, h, sign});
        }
    }
    return out;
}

std::vector<long> beta_numbers(const Partition& p, int L) {
    if (L < p.length()) throw std::invalid_argument("padding shorter than the partition");
    std::vector<long> n(static_cast<size_t>(L));
    for (int i = 1; i <= L; ++i) n[static_cast<size_t>(i - 1)] = p.part(i) + L - i;
    return n;
}

static Partition from_beta_numbers(std::vector<long> n) {
    std::sort(n.begin(), n.end(), std::greater<long>());
    const int L = static_cast<int>(n.size());
    std::vector<long> parts;
    for (int i = 1; i <= L; ++i) {
        long v = n[static_cast<size_t>(i - 1)] - (L - i);
        if (v < 0) throw std::domain_error("invalid beta-number vector");
        if (v > 0) parts.push_back(v);
    }
    return Partition(parts);
}

Partition remove_border_strip(const Partition& p, Cell c) {
    long h = hook_length(p, c);  // validates the cell
    std::vector<long> n = beta_numbers(p, p.length());
    n[static_cast<size_t>(c.i - 1)] -= h;
    // Distinctness of the new entries is guaranteed by border-strip theory.
    return from_beta_numbers(std::move(n));
}

// Parity of the permutation sorting v into strictly decreasing order.
static bool sort_parity_odd(std::vector<long> v) {
    long inversions = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] < v[j]) ++inversions;
    return inversions % 2 != 0;
}

CoreQuotient two_core_quotient_padded(const Partition& p, int L) {
    if (L % 2 != 0 || L < p.length()) throw std::invalid_argument("padding must be even and cover the partition");
    std::vector<long> n = beta_numbers(p, L);
    std::vector<long> evens, odds;  // 2m and 2n+1, each strictly decreasing
    for (long x : n)
        (x % 2 == 0 ? evens : odds).push_back(x);
    const int r = static_cast<int>(evens.size());
    const int s = static_cast<int>(odds.size());

    std::vector<long> mlam(evens.size()), mmu(odds.size());
    for (int i = 0; i < r; ++i) mlam[static_cast<size_t>(i)] = evens[static_cast<size_t>(i)] / 2 - (r - 1 - i);
    for (int i = 0; i < s; ++i) mmu[static_cast<size_t>(i)] = (odds[static_cast<size_t>(i)] - 1) / 2 - (s - 1 - i);

    CoreQuotient cq;
    cq.lam = Partition(mlam);
    cq.mu = Partition(mmu);
    cq.c = (r > s) ? (r - s - 1) : (s - r);

    // (-1)^{v} = eps * (-1)^{C(s+1,2)+sr}  (r > s)   or   eps * (-1)^{C(r,2)}  (s >= r),
    // where eps is the sign of the permutation taking (2n+1, 2m) to Lambda + delta_L.
    std::vector<long> concat = odds;
    concat.insert(concat.end(), evens.begin(), evens.end());
    bool eps_odd = sort_parity_odd(concat);
    long extra = (r > s) ? (static_cast<long>(s + 1) * s / 2 + static_cast<long>(s) * r)
                         : (static_cast<long>(r) * (r - 1) / 2);
    cq.v_odd = eps_odd != (extra % 2 != 0);
    return cq;
}

CoreQuotient two_core_quotient(const Partition& p) {
    long top = std::max<long>(p.length(), p.part(1));
    int L = static_cast<int>(2 * ((top + 1) / 2) + 2);
    return two_core_quotient_padded(p, L);
}

Partition from_core_quotient(long c, const Partition& lam, const Partition& mu) {
    if (c < 0) throw std::invalid_argument("core parameter must be >= 0");
    long r, s;
    if (c % 2 == 0) {  // s - r = c, L = 2r + c even
        r = std::max<long>({static_cast<long>(lam.length()), static_cast<long>(mu.length()) - c, 0L});
        s = r + c;
    } else {  // r - s - 1 = c, L = 2s + c + 1 even
        s = std::max<long>({static_cast<long>(mu.length()), static_cast<long>(lam.length()) - c - 1, 0L});
        r = s + c + 1;
    }
    std::vector<long> n;
    for (long x : plus_staircase(lam, static_cast<int>(r))) n.push_back(2 * x);
    for (long x : plus_staircase(mu, static_cast<int>(s))) n.push_back(2 * x + 1);
    return from_beta_numbers(std::move(n));
}

std::vector<long> plus_staircase(const Partition& p, int r) {
    if (r < p.length()) throw std::invalid_argument("staircase shorter than the partition");
    std::vector<long> m(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i) m[static_cast<size_t>(i - 1)] = p.part(i) + r - i;
    return m;
}

void for_each_partition(long n, const std::function<void(const Partition&)>& f) {
    if (n < 0) return;
    if (n == 0) {
        f(Partition());
        return;
    }
    // Reverse-lexicographic: start from (n); repeatedly shrink the last part > 1
    // and re-fill greedily.
    std::vector<long> a{n};
    for (;;) {
        f(Partition(a));
        int k = static_cast<int>(a.size()) - 1;
        while (k >= 0 && a[static_cast<size_t>(k)] == 1) --k;
        if (k < 0) return;
        long rem = static_cast<long>(a.size()) - 1 - k;  // trailing 1s
        long v = a[static_cast<size_t>(k)] - 1;
        rem += a[static_cast<size_t>(k)];
        a.resize(static_cast<size_t>(k));
        while (rem > 0) {  // refill greedily with parts of size at most v
            long take = std::min(v, rem);
            a.push_back(take);
            rem -= take;
        }
    }
}

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

long partition_count(long n) {
    long cnt = 0;
    for_each_partition(n, [&](const Partition&) { ++cnt; });
    return cnt;
}

}  // namespace lw
