#include <doctest.h>

#include <set>

#include "lw/partition.hpp"

using namespace lw;

TEST_CASE("conjugation") {
    CHECK(conjugate(Partition::parse("4,3,1,1")) == Partition::parse("4,2,2,1"));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition::parse("1,1,1,1,1")) == Partition::parse("5"));
    for (long n = 0; n <= 12; ++n)
        for (const auto& p : partitions_of(n)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(conjugate(p).size() == p.size());
        }
}

TEST_CASE("parsing round trip and validation") {
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse("4,3,1,1").to_string() == "4,3,1,1");
    CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("hook lengths") {
    Partition p = Partition::parse("4,3,1,1");
    CHECK(hook_length(p, {1, 1}) == 7);
    CHECK(hook_length(p, {1, 2}) == 4);
    CHECK(hook_length(Partition::parse("1"), {1, 1}) == 1);
    CHECK_THROWS_AS(hook_length(p, {1, 5}), std::domain_error);
    CHECK_THROWS_AS(hook_length(p, {3, 2}), std::domain_error);
}

TEST_CASE("odd hook cells of (5,5,1,1)") {
    auto cells = odd_hook_cells(Partition::parse("5,5,1,1"));
    REQUIRE(cells.size() == 6);
    std::multiset<long> hooks;
    for (const auto& c : cells) hooks.insert(c.hook);
    CHECK(hooks == std::multiset<long>({7, 5, 3, 3, 1, 1}));
    for (const auto& c : cells) {
        int expect = (c.cell.i == 1) ? +1 : -1;  // rows 2 and 4 carry minus
        CHECK(c.sign == expect);
    }
    CHECK(odd_hook_cells(Partition()).empty());
    auto two2 = odd_hook_cells(Partition::parse("2,2"));
    REQUIRE(two2.size() == 2);
    CHECK(two2[0].hook == 3);
    CHECK(two2[0].sign == -1);
    CHECK(two2[1].hook == 1);
    CHECK(two2[1].sign == +1);
}

TEST_CASE("border strips") {
    CHECK(remove_border_strip(Partition::parse("4,3,1,1"), {1, 2}) == Partition::parse("2,1,1,1"));
    CHECK(remove_border_strip(Partition::parse("5"), {1, 1}) == Partition());
    CHECK(remove_border_strip(Partition::parse("2,2"), {2, 1}) == Partition::parse("2"));
    for (long n = 1; n <= 12; ++n)
        for (const auto& p : partitions_of(n))
            for (int i = 1; i <= p.length(); ++i)
                for (int j = 1; j <= p.part(i); ++j)
                    CHECK(remove_border_strip(p, {i, j}).size() == p.size() - hook_length(p, {i, j}));
}

TEST_CASE("2-core and 2-quotient") {
    CoreQuotient cq = two_core_quotient(Partition::parse("4,3,1,1"));
    CHECK(cq.c == 2);
    CHECK(cq.lam == Partition::parse("1"));
    CHECK(cq.mu == Partition::parse("1,1"));
    CHECK(cq.v_odd);

    CoreQuotient cq2 = two_core_quotient(Partition::parse("5,5,1,1"));
    CHECK(cq2.c == 0);
    CHECK(cq2.lam == Partition::parse("3,1"));
    CHECK(cq2.mu == Partition::parse("2"));
    CHECK_FALSE(cq2.v_odd);

    CoreQuotient cq0 = two_core_quotient(Partition());
    CHECK(cq0.c == 0);
    CHECK(cq0.lam == Partition());
    CHECK(cq0.mu == Partition());
    CHECK_FALSE(cq0.v_odd);

    CHECK_THROWS_AS(two_core_quotient_padded(Partition::parse("2,1"), 3), std::invalid_argument);
    CHECK_THROWS_AS(two_core_quotient_padded(Partition::parse("2,1,1,1"), 2), std::invalid_argument);
    CHECK_THROWS_AS(from_core_quotient(-1, Partition(), Partition()), std::invalid_argument);

    CHECK(from_core_quotient(0, Partition::parse("3,1"), Partition::parse("2")) ==
          Partition::parse("5,5,1,1"));
    CHECK(from_core_quotient(0, Partition(), Partition()) == Partition());

    for (long n = 0; n <= 12; ++n)
        for (const auto& p : partitions_of(n)) {
            CoreQuotient q = two_core_quotient(p);
            CHECK(from_core_quotient(q.c, q.lam, q.mu) == p);
            CHECK(p.size() == q.c * (q.c + 1) / 2 + 2 * (q.lam.size() + q.mu.size()));
        }
}

TEST_CASE("enumeration is reverse-lexicographic and counts match Euler") {
    auto ps = partitions_of(4);
    REQUIRE(ps.size() == 5);
    CHECK(ps[0] == Partition::parse("4"));
    CHECK(ps[1] == Partition::parse("3,1"));
    CHECK(ps[2] == Partition::parse("2,2"));
    CHECK(ps[3] == Partition::parse("2,1,1"));
    CHECK(ps[4] == Partition::parse("1,1,1,1"));

    // Euler pentagonal recurrence as an independent oracle
    std::vector<long> p{1};
    for (long k = 1; k <= 12; ++k) {
        long acc = 0;
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
            if (g1 > k && g2 > k) break;
            long sign = (j % 2 == 1) ? 1 : -1;
            if (g1 <= k) acc += sign * p[static_cast<size_t>(k - g1)];
            if (g2 <= k) acc += sign * p[static_cast<size_t>(k - g2)];
        }
        p.push_back(acc);
    }
    CHECK(p[4] == 5);
    CHECK(p[10] == 42);
    for (long n = 0; n <= 12; ++n) CHECK(partition_count(n) == p[static_cast<size_t>(n)]);
}
