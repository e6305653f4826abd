#include <doctest.h>

#include "lw/wronskian.hpp"

using namespace lw;

TEST_CASE("strict vectors") {
    CHECK_THROWS_AS(StrictVector({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(StrictVector({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(StrictVector({-1}), std::invalid_argument);
    CHECK(StrictVector::from_partition(Partition::parse("3,1"), 2).v == std::vector<long>({4, 1}));
    CHECK(StrictVector({4, 1}).to_partition() == Partition::parse("3,1"));
    CHECK(StrictVector({1, 0}).to_partition() == Partition());
}

TEST_CASE("kappa") {
    CHECK(kappa(StrictVector({1}), StrictVector()) == PolyB(BigInt(1)));
    CHECK(kappa(StrictVector({1, 0}), StrictVector()) == PolyB(BigInt(-2)));
    CHECK(kappa(StrictVector({1}), StrictVector({1})) == -(beta_poly() * BigInt(2)));
}

TEST_CASE("phi_tilde base cases") {
    CHECK(phi_tilde(StrictVector(), StrictVector()) == PolyYB{PolyB(BigInt(1))});
    CHECK(phi_tilde(StrictVector({0}), StrictVector()) == PolyYB{PolyB(BigInt(1))});
    PolyYB y = PolyYB::var();
    CHECK(phi_tilde(StrictVector({1}), StrictVector()) ==
          y - PolyYB(beta_poly() + PolyB(BigInt(1))));
    CHECK(phi_tilde(StrictVector({1}), StrictVector({1})) ==
          y * y - PolyYB(beta_poly() * beta_poly() - PolyB(BigInt(1))));
    CHECK(phi_tilde(StrictVector({0}), StrictVector({0})) == PolyYB{PolyB(BigInt(1))});
}

TEST_CASE("golden example polynomials") {
    // Phi^{(1)}_{(3,1),(2)} = y^6 - 8y^5 + 20y^4 - 32y^3 + 24y^2
    RatPoly g = eval_beta(phi(Partition::parse("3,1"), Partition::parse("2")), BigRat(1));
    RatPoly expect;
    expect.c = {BigRat(0), BigRat(0), BigRat(24), BigRat(-32), BigRat(20), BigRat(-8), BigRat(1)};
    CHECK(g == expect);

    // Phi^{(3)}_{(2,1,1),()} = y^4 - 8y^3 + 20y^2 - 32y + 24
    RatPoly g2 = eval_beta(phi(Partition::parse("2,1,1"), Partition()), BigRat(3));
    RatPoly expect2;
    expect2.c = {BigRat(24), BigRat(-32), BigRat(20), BigRat(-8), BigRat(1)};
    CHECK(g2 == expect2);

    CHECK(phi(Partition(), Partition()) == PolyYB{PolyB(BigInt(1))});
}

TEST_CASE("constant terms") {
    // ((3,1),(2)) -> (beta+3)(beta+2) beta^2 (beta-1)(beta-3)
    PolyB b = beta_poly();
    PolyB expect = (b + PolyB(BigInt(3))) * (b + PolyB(BigInt(2))) * b * b *
                   (b - PolyB(BigInt(1))) * (b - PolyB(BigInt(3)));
    CHECK(constant_term_hooks(Partition::parse("3,1"), Partition::parse("2")) == expect);
    CHECK(constant_term_hooks(Partition(), Partition()) == PolyB(BigInt(1)));
    // ((1),(1)) -> (1-beta)(1+beta) via Lambda = (2,2)
    CHECK(constant_term_hooks(Partition::parse("1"), Partition::parse("1")) ==
          (PolyB(BigInt(1)) - b) * (PolyB(BigInt(1)) + b));

    CHECK(constant_term_pochhammer(StrictVector({1}), StrictVector()) ==
          -(b + PolyB(BigInt(1))));
    CHECK(constant_term_pochhammer(StrictVector({0}), StrictVector({0})) == PolyB(BigInt(1)));
}

TEST_CASE("subleading formulas on small cases") {
    auto [l1, l2] = subleading(StrictVector({1}), StrictVector());
    CHECK(l1 == -(beta_poly() + PolyB(BigInt(1))));

    auto [m1, m2] = subleading(StrictVector({1}), StrictVector({1}));
    CHECK(m1.zero());
    CHECK(m2 == PolyB(BigInt(1)) - beta_poly() * beta_poly());

    CHECK_THROWS_AS(subleading(StrictVector({0}), StrictVector()), std::domain_error);
}

TEST_CASE("p_poly") {
    CHECK(p_poly(Partition()) == PolyYB{PolyB(BigInt(1))});
    PolyYB z = PolyYB::var();
    CHECK(p_poly(Partition::parse("1")) ==
          z - PolyYB(beta_poly() * beta_poly() - PolyB(BigInt(1))));
    CHECK(p_poly(Partition::parse("2,1")).degree() == 3);
}

TEST_CASE("hermite reduction") {
    RatPoly x = RatPoly::var();
    CHECK(hermite_monic(2) == x * x - RatPoly(ratio(1, 2)));
    CHECK(hermite_reduce_check(StrictVector({1}), StrictVector()));
    CHECK(hermite_reduce_check(StrictVector({0}), StrictVector({0})));
    CHECK(hermite_reduce_check(StrictVector({3, 1}), StrictVector({2})));
}
