#include <doctest.h>

#include "lw/poly.hpp"

using namespace lw;

TEST_CASE("exact division") {
    PolyB b = beta_poly();
    CHECK(exact_div(b * b - PolyB(BigInt(1)), b - PolyB(BigInt(1))) == b + PolyB(BigInt(1)));
    CHECK_THROWS_AS(exact_div(b * b - PolyB(BigInt(2)), b - PolyB(BigInt(1))), InexactDivision);
    CHECK_THROWS_AS(exact_div(BigInt(3), BigInt(2)), InexactDivision);
    CHECK(exact_div(BigInt(-12), BigInt(4)) == BigInt(-3));
}

TEST_CASE("beta shift") {
    PolyB b = beta_poly();
    CHECK(substitute_beta_shift(b * b, -2) == (b - PolyB(BigInt(2))) * (b - PolyB(BigInt(2))));
    CHECK(substitute_beta_shift(b, 5) == b + PolyB(BigInt(5)));
}

TEST_CASE("laguerre coefficients") {
    CHECK(laguerre_monic(0) == PolyYB{PolyB(BigInt(1))});
    PolyYB y = PolyYB::var();
    CHECK(laguerre_monic(1) == y - PolyYB(beta_poly() + PolyB(BigInt(1))));
    // n = 2: y^2 - 2(beta+2) y + (beta+1)(beta+2)
    PolyYB expect = y * y - y * (beta_poly() * BigInt(2) + PolyB(BigInt(4))) +
                    PolyYB(pochhammer_beta(1, 2));
    CHECK(laguerre_monic(2) == expect);
}

TEST_CASE("fraction-free determinant basics") {
    using M = std::vector<std::vector<PolyYB>>;
    PolyYB y = PolyYB::var();
    PolyYB one{PolyB(BigInt(1))};
    CHECK(ff_determinant(M{{y}}) == y);
    CHECK(ff_determinant(M{{y, one}, {one, y}}) == y * y - one);
    // singular matrix
    CHECK(ff_determinant(M{{y, y}, {y, y}}).zero());

    // 3x3 Vandermonde in beta-free symbols x_i = y + c_i; the determinant
    // collapses to the product of differences (3-0)(1-0)(3-1)... with the
    // convention Delta(v) = prod_{i<j}(v_j - v_i)
    PolyYB x1 = y, x2 = y + PolyYB{PolyB(BigInt(1))}, x3 = y + PolyYB{PolyB(BigInt(3))};
    M v(3, std::vector<PolyYB>(3, one));
    v[1] = {x1, x2, x3};
    v[2] = {x1 * x1, x2 * x2, x3 * x3};
    // Delta = (x2-x1)(x3-x1)(x3-x2) = 1*3*2 = 6
    CHECK(ff_determinant(std::move(v)) == PolyYB{PolyB(BigInt(6))});
    // and with symbolic differences: x, x+y as columns over rows (1,1),(x, x+y)
    M w(2, std::vector<PolyYB>(2, one));
    w[1] = {x1, x1 * x1};
    CHECK(ff_determinant(std::move(w)) == x1 * x1 - x1);
}

TEST_CASE("rationals canonicalize") {
    CHECK(ratio(2, 4) == ratio(1, 2));
    CHECK(ratio(-2, 4) == ratio(1, -2));
    CHECK(eval_at_rational(beta_poly() * beta_poly(), ratio(1, 2)) == ratio(1, 4));
}

TEST_CASE("variable-power shifts") {
    PolyB p = beta_poly() * beta_poly() + beta_poly();  // b^2 + b
    CHECK(p.shifted_down(1) == beta_poly() + PolyB(BigInt(1)));
    CHECK_THROWS_AS((p + PolyB(BigInt(1))).shifted_down(1), InexactDivision);
    CHECK(p.shifted_up(2).degree() == 4);
    PolyB z;
    CHECK(z.shifted_down(3).zero());
}
