#include "lw/shiftsym.hpp"

#include <stdexcept>

namespace lw {

BigRat pk(const Partition& lam, int k) {
    if (k < 0 || k > 6) throw std::domain_error("pk: k must be in 0..6");
    if (k == 0) return BigRat(1);
    auto pw = [&](const BigRat& x) {
        BigRat p(1);
        for (int t = 0; t < k - 1; ++t) p *= x;
        return p;
    };
    BigRat acc(0);
    for (int i = 1; i <= lam.length(); ++i)
        acc += pw(ratio(2 * lam.part(i) - 2 * i + 1, 2)) - pw(ratio(-2 * i + 1, 2));
    return acc;
}

QkdvEigen qkdv_eigenvalues(const Partition& lam) {
    const BigRat p2 = pk(lam, 2), p3 = pk(lam, 3), p4 = pk(lam, 4), p5 = pk(lam, 5),
                 p6 = pk(lam, 6);
    const RatPoly beta = RatPoly::var();
    const RatPoly b2 = beta * beta;
    // h0 = (beta^2 - 1)/8
    const RatPoly h0 = (b2 - RatPoly(BigRat(1))) * ratio(1, 8);

    QkdvEigen e;
    e.I1 = h0 + RatPoly(p2);
    e.I3 = h0 * h0 + b2 * RatPoly(ratio(3, 4) * p2) + beta * RatPoly(ratio(3, 2) * p3) +
           RatPoly(p4);
    e.I5 = h0 * h0 * h0 + b2 * b2 * RatPoly(ratio(15, 64) * p2) +
           b2 * beta * RatPoly(ratio(15, 16) * p3) +
           b2 * RatPoly(ratio(15, 8) * p4 + ratio(3, 16) * p2) +
           beta * RatPoly(ratio(15, 8) * p5 + ratio(3, 8) * p3) +
           RatPoly(ratio(3, 4) * p6 + ratio(1, 4) * p4);
    return e;
}

RatPoly root_sum(const Partition& lam) {
    const BigRat p2 = pk(lam, 2), p3 = pk(lam, 3), p4 = pk(lam, 4);
    const RatPoly beta = RatPoly::var();
    return RatPoly(BigRat(2) * p4 - BigRat(2) * p2 * p2 + ratio(1, 2) * p2) +
           beta * RatPoly(BigRat(3) * p3) + beta * beta * RatPoly(p2);
}

RatPoly root_sum_sq(const Partition& lam) {
    const BigRat p2 = pk(lam, 2), p3 = pk(lam, 3), p4 = pk(lam, 4), p5 = pk(lam, 5),
                 p6 = pk(lam, 6);
    const RatPoly beta = RatPoly::var();
    const RatPoly b2 = beta * beta;
    return RatPoly(BigRat(14) * p6 - BigRat(40) * p4 * p2 + ratio(64, 3) * p2 * p2 * p2 +
                   ratio(65, 3) * p4 - BigRat(20) * p2 * p2 + ratio(27, 8) * p2) +
           beta * RatPoly(BigRat(35) * p5 - BigRat(60) * p3 * p2 + ratio(65, 2) * p3) +
           b2 * RatPoly(BigRat(30) * p4 - BigRat(22) * p2 * p2 + ratio(25, 2) * p2) +
           b2 * beta * RatPoly(BigRat(10) * p3) + b2 * b2 * RatPoly(p2);
}

}  // namespace lw
