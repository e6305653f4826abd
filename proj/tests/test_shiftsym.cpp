#include <doctest.h>

#include "lw/shiftsym.hpp"
#include "lw/wronskian.hpp"

using namespace lw;

TEST_CASE("shifted power sums") {
    CHECK(pk(Partition(), 2) == BigRat(0));
    CHECK(pk(Partition::parse("2,1"), 3) == BigRat(0));  // self-conjugate
    CHECK(pk(Partition::parse("1"), 4) == ratio(1, 4));
    for (long n = 0; n <= 10; ++n)
        for (const auto& lam : partitions_of(n)) {
            CHECK(pk(lam, 0) == BigRat(1));
            CHECK(pk(lam, 1) == BigRat(0));
            CHECK(pk(lam, 2) == BigRat(n));
            Partition cj = conjugate(lam);
            for (int k = 3; k <= 6; ++k) {
                BigRat expect = pk(lam, k);
                if (k % 2 != 0) expect = -expect;
                CHECK(pk(cj, k) == expect);
            }
        }
    CHECK_THROWS_AS(pk(Partition(), 7), std::domain_error);
}

TEST_CASE("eigenvalues for the empty partition") {
    QkdvEigen e = qkdv_eigenvalues(Partition());
    RatPoly b = RatPoly::var();
    RatPoly h0 = (b * b - RatPoly(BigRat(1))) * ratio(1, 8);
    CHECK(e.I1 == h0);
    CHECK(e.I3 == h0 * h0);
    CHECK(e.I5 == h0 * h0 * h0);
}

TEST_CASE("eigenvalues for a single box") {
    QkdvEigen e = qkdv_eigenvalues(Partition::parse("1"));
    RatPoly b = RatPoly::var();
    RatPoly h0 = (b * b - RatPoly(BigRat(1))) * ratio(1, 8);
    CHECK(e.I1 == h0 + RatPoly(BigRat(1)));
    CHECK(e.I3 == h0 * h0 + b * b * ratio(3, 4) + RatPoly(ratio(1, 4)));
}

TEST_CASE("root sums") {
    CHECK(root_sum(Partition()).zero());
    RatPoly b = RatPoly::var();
    CHECK(root_sum(Partition::parse("1")) == b * b - RatPoly(BigRat(1)));
    CHECK(root_sum_sq(Partition()).zero());
    // single box: Sigma z^2 = (beta^2-1)^2
    RatPoly sq = b * b - RatPoly(BigRat(1));
    CHECK(root_sum_sq(Partition::parse("1")) == sq * sq);

    // Sigma z equals minus the y^{d-2} coefficient of Phi_{lambda,lambda'}
    for (long n = 0; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            PolyYB p = phi(lam, conjugate(lam));
            RatPoly coeff = n >= 1 ? to_rat(p.coeff(p.degree() - 2)) : RatPoly();
            CHECK(root_sum(lam) == RatPoly() - coeff);
        }

    // and equals 2 I3 - 2 I1^2 as polynomials in beta
    for (long n = 0; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) {
            QkdvEigen e = qkdv_eigenvalues(lam);
            CHECK(root_sum(lam) == (e.I3 - e.I1 * e.I1) * BigRat(2));
        }
}
