#include <doctest.h>

#include "lw/qkdv.hpp"
#include "lw/shiftsym.hpp"

using namespace lw;

namespace {
RatPoly h0() {
    RatPoly b = RatPoly::var();
    return (b * b - RatPoly(BigRat(1))) * ratio(1, 8);
}
}  // namespace

TEST_CASE("fock space enumeration") {
    FockSpace sp(6);
    CHECK(sp.dim() == 1 + 1 + 2 + 3 + 5 + 7 + 11);
    CHECK(sp.degree_block(4).size() == 5);
    CHECK(sp.degree_of(0) == 0);
}

TEST_CASE("schur vectors") {
    FockSpace sp(6);
    CHECK(schur_vector(sp, Partition()).coef[0] == RatPoly(BigRat(1)));

    // s_(1) = q_1
    FockVector s1 = schur_vector(sp, Partition::parse("1"));
    std::vector<int> e(6, 0);
    e[0] = 1;
    CHECK(s1.coef[static_cast<size_t>(sp.index_of(e))] == RatPoly(BigRat(1)));

    // s_(2) = q_1^2/2 + q_2/2 and s_(1,1) = q_1^2/2 - q_2/2
    FockVector s2 = schur_vector(sp, Partition::parse("2"));
    FockVector s11 = schur_vector(sp, Partition::parse("1,1"));
    std::vector<int> e11(6, 0), e2(6, 0);
    e11[0] = 2;
    e2[1] = 1;
    CHECK(s2.coef[static_cast<size_t>(sp.index_of(e11))] == RatPoly(ratio(1, 2)));
    CHECK(s2.coef[static_cast<size_t>(sp.index_of(e2))] == RatPoly(ratio(1, 2)));
    CHECK(s11.coef[static_cast<size_t>(sp.index_of(e11))] == RatPoly(ratio(1, 2)));
    CHECK(s11.coef[static_cast<size_t>(sp.index_of(e2))] == RatPoly(ratio(-1, 2)));

    CHECK_THROWS_AS(schur_vector(sp, Partition::parse("7")), std::domain_error);
}

TEST_CASE("L0 grading and simple brackets") {
    FockSpace sp(6);
    FockVector s = schur_vector(sp, Partition::parse("2,1"));
    FockVector lhs = apply_virasoro(0, s);
    CHECK((lhs - s.scaled(h0() + RatPoly(BigRat(3)))).is_zero());

    // [L_1, L_-1] = 2 L_0 on degree <= 5
    for (int d = 0; d <= 5; ++d)
        for (int idx : sp.degree_block(d)) {
            FockVector v = fock_basis(sp, idx);
            FockVector br = apply_virasoro(1, apply_virasoro(-1, v)) -
                            apply_virasoro(-1, apply_virasoro(1, v));
            FockVector expect = apply_virasoro(0, v).scaled(RatPoly(BigRat(2)));
            CHECK((br - expect).is_zero());
        }

    // [L_2, L_-2] = 4 L_0 - 1 on degree <= 4
    for (int d = 0; d <= 4; ++d)
        for (int idx : sp.degree_block(d)) {
            FockVector v = fock_basis(sp, idx);
            FockVector br = apply_virasoro(2, apply_virasoro(-2, v)) -
                            apply_virasoro(-2, apply_virasoro(2, v));
            FockVector expect = apply_virasoro(0, v).scaled(RatPoly(BigRat(4))) -
                                v.scaled(RatPoly(BigRat(1)));
            CHECK((br - expect).is_zero());
        }
}

TEST_CASE("hamiltonians diagonal on Schur vectors") {
    FockSpace sp(6);
    for (long n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            FockVector s = schur_vector(sp, lam);
            QkdvEigen e = qkdv_eigenvalues(lam);
            CHECK((apply_i_operator(1, s) - s.scaled(e.I1)).is_zero());
            CHECK((apply_i_operator(3, s) - s.scaled(e.I3)).is_zero());
            CHECK((apply_i_operator(5, s) - s.scaled(e.I5)).is_zero());
        }
}

TEST_CASE("A_k operators diagonal with shifted power sums") {
    FockSpace sp(6);
    CHECK(a_operator_expr(1).empty());
    for (long n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            FockVector s = schur_vector(sp, lam);
            for (int k = 2; k <= 6; ++k) {
                FockVector av = apply_residue(a_operator_expr(k), s);
                CHECK((av - s.scaled(RatPoly(pk(lam, k)))).is_zero());
            }
        }
}

TEST_CASE("I operators vs differential polynomials") {
    IdentityReport rep = hamiltonian_identity_check(5);
    CHECK(rep.corrected_match[0]);
    CHECK(rep.corrected_match[1]);
    CHECK(rep.corrected_match[2]);
    CHECK(rep.printed_match[0]);
    // known transcription issue in the printed beta^2 brackets
    CHECK_FALSE(rep.printed_match[1]);
    CHECK_FALSE(rep.printed_match[2]);
    CHECK(rep.note.find("does not match its A-combination") == std::string::npos);
}
