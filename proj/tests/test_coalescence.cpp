#include <doctest.h>

#include "lw/coalescence.hpp"
#include "lw/wronskian.hpp"

using namespace lw;

TEST_CASE("reducedness") {
    CHECK_FALSE(is_reduced(Triple{BigRat(1), Partition::parse("3,1"), Partition::parse("2")}));
    CHECK(is_reduced(Triple{ratio(1, 2), Partition::parse("3,1"), Partition::parse("2")}));
    CHECK(is_reduced(Triple{BigRat(0), Partition::parse("1"), Partition::parse("1")}));
}

TEST_CASE("worked example edge and reduction") {
    Triple t{BigRat(1), Partition::parse("3,1"), Partition::parse("2")};
    auto edges = coalescence_edges(t);
    REQUIRE_FALSE(edges.empty());
    bool found = false;
    for (const auto& e : edges)
        if (e.cell.i == 2 && e.cell.j == 3) {
            found = true;
            CHECK(e.target.beta == BigRat(3));
            CHECK(e.target.lam == Partition::parse("2,1,1"));
            CHECK(e.target.mu == Partition());
        }
    CHECK(found);

    auto [red, expo] = reduce(t);
    CHECK(red.beta == BigRat(3));
    CHECK(red.lam == Partition::parse("2,1,1"));
    CHECK(red.mu == Partition());
    CHECK(expo == 2);

    auto [red2, expo2] = reduce(red);
    CHECK(red2 == red);
    CHECK(expo2 == 0);
}

TEST_CASE("reduced triples have no edges") {
    CHECK(coalescence_edges(Triple{ratio(1, 3), Partition::parse("2,1"), Partition()}).empty());
    CHECK(coalescence_edges(Triple{BigRat(5), Partition::parse("1"), Partition()}).empty());
}

TEST_CASE("edge identity Phi = y^{|beta|+1} Phi~ on small triples") {
    for (long n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            Partition mu = conjugate(lam);
            PolyB ct = constant_term_hooks(lam, mu);
            for (long b = -2 * n; b <= 2 * n; ++b) {
                if (sgn(eval_at_rational(ct, BigRat(b))) != 0) continue;
                Triple t{BigRat(b), lam, mu};
                auto edges = coalescence_edges(t);
                CHECK_FALSE(edges.empty());
                for (const auto& e : edges) {
                    RatPoly lhs = eval_beta(phi(lam, mu), BigRat(b));
                    RatPoly rhs = eval_beta(phi(e.target.lam, e.target.mu), e.target.beta);
                    CHECK(lhs == rhs.shifted_up(static_cast<int>(std::labs(b) + 1)));
                }
            }
        }
}

TEST_CASE("critical sets") {
    CHECK(c_set(0).empty());
    CHECK(c_set(1) == std::set<long>({-1, 1}));
    CHECK(c_set(3) == std::set<long>({-5, -3, -1, 0, 1, 3, 5}));
    for (long n = 0; n <= 8; ++n) CHECK(b_set(n) == c_set(n));
}
