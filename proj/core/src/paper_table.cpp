// Published closed forms of c_{N,n}, N <= 7, for a_{1,1} = alpha, a_{1,-1} = beta.
// Each expression is entered once, as printed; unit tests compare the table
// against the hierarchy rather than trusting it.

#include <cmath>

#include "nlsdtn/oracles.hpp"

namespace nlsdtn {

namespace {
using C = std::complex<double>;
constexpr C i{0.0, 1.0};
}  // namespace

GradedCoefficients paper_c_table(cplx alpha, cplx beta, double omega, int lambda) {
    if (!(omega > 0.0)) throw DomainError("paper_c_table: omega must be positive");
    if (lambda != 1 && lambda != -1) throw DomainError("paper_c_table: lambda must be +1 or -1");

    const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s7 = std::sqrt(7.0);
    const double s15 = std::sqrt(15.0), s21 = std::sqrt(21.0), s35 = std::sqrt(35.0);
    const double s105 = std::sqrt(105.0);
    const double lam = lambda;
    const C a = alpha, b = beta, ac = std::conj(alpha), bc = std::conj(beta);
    const double A2 = std::norm(alpha), B2 = std::norm(beta);
    const double w12 = std::sqrt(omega), w32 = omega * w12, w52 = omega * w32;

    GradedCoefficients c(omega);

    // order 1
    c.set(1, 1, -a * w12);
    c.set(1, -1, i * b * w12);

    // order 3
    c.set(3, 3, -i * (s3 + C(-2, -1)) * a * a * bc * lam / (2.0 * w12));
    c.set(3, 1, -a * lam * (A2 + 4.0 * B2) / (2.0 * w12));
    c.set(3, -1, -i * b * lam * (B2 + C(1, -1) * A2) / w12);
    c.set(3, -3, (s3 - 2.0 - i) * b * b * ac * lam / (2.0 * w12));

    // order 5
    c.set(5, 5,
          (C(2, 1) - C(5, 2) * s3 - C(2, 3) * s5 + C(3, 2) * s15) * a * a * a * bc * bc /
              (16.0 * w32));
    c.set(5, 3,
          -i * a * a * bc *
              ((C(3, 6) + C(2, 3) * s3) * A2 + C(5, 2) * (C(3, 2) + C(2, 1) * s3) * B2) /
              (2.0 * (C(12, 3) + C(7, 2) * s3) * w32));
    c.set(5, 1,
          a * (A2 * A2 - 4.0 * (s3 - 6.0) * A2 * B2 + 2.0 * (9.0 - i * s3) * B2 * B2) /
              (8.0 * w32));
    c.set(5, -1,
          b *
              ((s3 + C(-2, 3)) * A2 * A2 - 2.0 * (s3 + C(2, -5)) * A2 * B2 -
               2.0 * i * B2 * B2) /
              (4.0 * w32));
    c.set(5, -3,
          -b * b * ac *
              ((C(48, 9) + C(29, 4) * s3) * A2 + 8.0 * (C(3, 5) + C(2, 3) * s3) * B2) /
              (4.0 * (C(21, 12) + C(12, 7) * s3) * w32));
    c.set(5, -5,
          (C(1, -2) - C(2, -5) * s3 - C(3, -2) * s5 + C(2, -3) * s15) * b * b * b * ac * ac /
              (16.0 * w32));

    // order 7
    {
        const C brace = C(-595, 147) + C(525, -147) * s3 + C(196, 49) * s5 - C(223, -30) * s7 -
                        C(189, -14) * s15 + C(192, -39) * s21 + C(67, 19) * s35 -
                        C(63, 1) * s105;
        c.set(7, 7,
              std::pow(a, 4) * std::pow(bc, 3) * lam / (32.0 * (56.0 + 23.0 * s7) * w52) * brace);
    }
    {
        const C brace =
            (C(1110, 2345) + C(645, 1350) * s3 + C(106, 1011) * s5 + C(63, 582) * s15) * A2 +
            C(1, 1) * (C(4542, 903) + C(2623, 524) * s3 + C(1612, 1359) * s5 + C(931, 786) * s15) *
                B2;
        c.set(7, 5,
              i * std::pow(a, 3) * bc * bc * lam /
                  (8.0 * (C(26, 97) + C(15, 56) * s3) * (C(25, 10) + C(11, 4) * s5) * w52) * brace);
    }
    {
        const C brace =
            (C(42588, 1476) + C(24588, 852) * s3) * A2 * A2 -
            C(6, -6) *
                (C(-25328, -35261) - C(14623, 20358) * s3 + C(3594, 1545) * s5 +
                 C(2075, 892) * s15) *
                A2 * B2 +
            (C(395885, 21770) + C(228564, 12569) * s3 - C(9405, 7020) * s5 - C(5430, 4053) * s15) *
                B2 * B2 -
            96.0 * i * (C(795, 627) + C(459, 362) * s3) * A2 * B2;
        c.set(7, 3,
              -a * a * bc * lam / (96.0 * (C(627, 2340) + C(362, 1351) * s3) * w52) * brace);
    }
    {
        const C brace = 3.0 * A2 * A2 * A2 + 6.0 * (4.0 + 5.0 * s3) * A2 * A2 * B2 +
                        2.0 * (C(162, 51) - C(13, 12) * s3) * A2 * B2 * B2 -
                        6.0 * A2 * B2 * ((s3 - 6.0) * A2 + C(2, 2) * (s3 + C(2, 5)) * B2) +
                        16.0 * (15.0 - 2.0 * i * s3) * B2 * B2 * B2;
        c.set(7, 1, -a * lam / (48.0 * w52) * brace);
    }
    {
        const C brace = 3.0 * (3.0 - 2.0 * i * s3) * A2 * A2 * A2 +
                        (C(39, 42) + C(28, -45) * s3) * A2 * A2 * B2 +
                        (C(36, -15) + C(23, 36) * s3) * A2 * B2 * B2 +
                        3.0 * A2 * B2 * (C(-2, 2) * (s3 - 6.0) * A2 - (s3 + C(2, 5)) * B2) -
                        12.0 * i * B2 * B2 * B2;
        c.set(7, -1, b * lam / (24.0 * w52) * brace);
    }
    {
        const C brace =
            3.0 *
                (C(32088, 120795) + C(18526, 69741) * s3 + C(8106, -6393) * s5 +
                 C(4680, -3691) * s15) *
                A2 * A2 +
            6.0 * i *
                (C(168629, 32048) + C(97358, 18503) * s3 + C(8733, 11700) * s5 +
                 C(5042, 6755) * s15) *
                A2 * B2 -
            C(4, -4) * b *
                (4.0 * (C(265, 7718) + C(153, 4456) * s3) * B2 * bc -
                 9.0 * (C(892, 3329) + C(515, 1922) * s3) * A2 * bc);
        c.set(7, -3,
              C(1, 1) * b * b * ac * lam /
                  (96.0 * (C(2340, 8733) + C(1351, 5042) * s3) * w52) * brace);
    }
    {
        const C brace =
            3.0 *
                (C(3820, 3375) + C(2205, 1950) * s3 + C(1464, 1395) * s5 + C(845, 806) * s15) *
                A2 +
            C(1, 1) *
                (C(7755, 7962) + C(4466, 4602) * s3 + C(2742, 2586) * s5 + C(1578, 1495) * s15) *
                B2;
        c.set(7, -5,
              -C(1, -1) * std::pow(b, 3) * ac * ac * lam /
                  (24.0 * (C(97, 26) + C(56, 15) * s3) * (C(15, 40) + C(7, 18) * s5) * w52) *
                  brace);
    }
    {
        const C brace = C(-147, -595) + C(147, 525) * s3 - C(49, -196) * s5 - C(30, 223) * s7 -
                        C(14, 189) * s15 + C(39, 192) * s21 - C(19, -67) * s35 +
                        C(1, -63) * s105;
        c.set(7, -7,
              std::pow(b, 4) * std::pow(ac, 3) * lam / (32.0 * (56.0 + 23.0 * s7) * w52) * brace);
    }
    return c;
}

}  // namespace nlsdtn
