// Acceptance gate: one line per criterion, sizes and tolerances pinned here.

#include <cstdio>
#include <string>
#include <thread>

#include "lw/poly.hpp"
#include "lw/verify.hpp"
#include "lw/wronskian.hpp"

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, bool gating = true,
            const std::string& extra = "") {
    const char* tag = pass ? "PASS" : (gating ? "FAIL" : "UNCONFIRMED");
    std::printf("[%s] criterion %2d: %s%s%s\n", tag, criterion, what.c_str(),
                extra.empty() ? "" : " -- ", extra.c_str());
    std::fflush(stdout);
    if (!pass && gating) ++failures;
}

lw::VerifyOptions opts(long max_size, double tol = 1e-9) {
    lw::VerifyOptions o;
    o.max_size = max_size;
    o.tol = tol;
    o.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return o;
}

void from_suite(int criterion, const std::string& what, const char* suite, long max_size,
                double tol = 1e-9, bool gating = true) {
    lw::SuiteResult r = lw::run_suite(suite, opts(max_size, tol));
    report(criterion, r.pass, what, gating,
           r.pass ? std::to_string(r.checks) + " checks" : r.detail);
}

}  // namespace

int main() {
    using namespace lw;

    {  // 1. golden polynomials, exact
        RatPoly g1 = eval_beta(phi(Partition::parse("3,1"), Partition::parse("2")), BigRat(1));
        RatPoly e1;
        e1.c = {BigRat(0), BigRat(0), BigRat(24), BigRat(-32), BigRat(20), BigRat(-8), BigRat(1)};
        RatPoly g2 = eval_beta(phi(Partition::parse("2,1,1"), Partition()), BigRat(3));
        RatPoly e2;
        e2.c = {BigRat(24), BigRat(-32), BigRat(20), BigRat(-8), BigRat(1)};
        report(1, g1 == e1 && g2 == e2,
               "golden polynomials Phi^{(1)}_{(3,1),(2)} and Phi^{(3)}_{(2,1,1),()}");
    }

    from_suite(2, "constant term: Wronskian = Pochhammer = hook product, |lambda|+|mu| <= 7",
               "constant-term", 7);
    from_suite(3, "subleading coefficient formulas match the Wronskian, degree <= 8",
               "subleading", 8);
    from_suite(4, "symmetry Phi_{lam',mu'}(y) = (-1)^{|lam|+|mu|} Phi_{mu,lam}(-y), <= 7",
               "wronskian-symmetry", 7);
    from_suite(5, "root sum formula equals -phi^{[d-2]} of Phi_{lam,lam'}, |lambda| <= 7",
               "rootsum", 7);
    from_suite(6, "conjectural Sigma z^2 formula, |lambda| <= 8, three rational beta, 1e-6",
               "rootsum-sq", 8, 1e-6, /*gating=*/false);
    from_suite(7, "coalescence edges satisfy Phi = y^{|beta|+1} Phi~, <= 7, worked example",
               "coalescence", 7);
    from_suite(8, "B_n = C_n by brute force, n <= 10", "bset", 10);
    from_suite(9, "Hermite reduction at beta = -1/2, |lambda|+|mu| <= 6", "hermite", 6);
    from_suite(10, "QQ residual < 1e-9 and T = Q+ Q- sin(pi beta)/(pi beta), lam <= 4",
               "spectra-qq", 4, 1e-9);
    from_suite(11, "BLZ counting vs p(n) and self-conjugate partitions, n <= 10/12",
               "spectra-count", 10);
    from_suite(11, "irreducibility equivalence (count = p(n) iff beta not in A_n = C_n), n <= 8",
               "verma", 8);
    from_suite(12, "Virasoro commutators at c = -2 on truncated blocks, N = 8",
               "qkdv-virasoro", 8);
    from_suite(12, "I_1, I_3, I_5 and A_2..A_6 diagonal on Schur vectors, n <= 8", "qkdv-diag", 8);
    from_suite(12, "hamiltonian differential-polynomial identities, N = 6", "qkdv-identity", 6);
    from_suite(13, "numeric roots satisfy the BLZ system to 1e-7, lam <= 6, beta in {0.3, 5/3}",
               "numeric-roots", 6, 1e-7);
    from_suite(13, "numeric Newton sums match 2I3 - 2I1^2 to 1e-8, lam <= 6", "numeric-newton", 6);

    std::printf("analytic results (completeness theorem, ODE asymptotics) are covered indirectly "
                "by the closed-form identities above.\n");
    if (failures) {
        std::printf("ACCEPTANCE: %d criterion group(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all gating criteria passed\n");
    return 0;
}
