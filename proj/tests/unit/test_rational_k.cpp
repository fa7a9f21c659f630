#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "nlsdtn/rational_k.hpp"
#include "test_support.hpp"

namespace nlsdtn {
namespace {

using testing::complex_rel_near;
using testing::I;

PolynomialK poly(std::initializer_list<cplx> c) { return PolynomialK(std::vector<cplx>(c)); }

TEST(PolynomialK, TrimsNegligibleLeadingCoefficients) {
    const auto p = poly({1.0, 2.0, 1e-14});
    EXPECT_EQ(p.degree(), 1);
    EXPECT_TRUE(PolynomialK{}.is_zero());
    EXPECT_EQ(PolynomialK{}.degree(), -1);
}

TEST(PolynomialK, SyntheticDivision) {
    // (k - 2)(k + 3) + 5
    const auto p = poly({-1.0, 1.0, 1.0});
    const auto d = p.deflate(2.0);
    EXPECT_TRUE(complex_rel_near(d.remainder, 5.0, 1e-15));
    EXPECT_TRUE(d.quotient.approx_equal(poly({3.0, 1.0}), 1e-15));
}

TEST(PolynomialK, ProductEvaluatesPointwise) {
    const auto a = poly({1.0, I, 2.0});
    const auto b = poly({-0.5, 3.0});
    for (cplx k : {cplx(0.3, 0.1), cplx(-2.0, 1.5)}) {
        EXPECT_TRUE(complex_rel_near((a * b)(k), a(k) * b(k), 1e-14));
        EXPECT_TRUE(complex_rel_near((a + b)(k), a(k) + b(k), 1e-14));
    }
}

TEST(RationalK, SumUsesCommonFactors) {
    // 1/(k-1) + 1/(k-1) must keep a single simple factor.
    auto r = RationalK::simple_pole(1.0, 1.0) + RationalK::simple_pole(1.0, 1.0);
    ASSERT_EQ(r.den_factors().size(), 1u);
    EXPECT_EQ(r.den_factors()[0].multiplicity, 1);
    EXPECT_TRUE(complex_rel_near(r.evaluate(3.0), 1.0, 1e-15));
}

TEST(RationalK, SumBuildsLcm) {
    const auto a = RationalK::simple_pole(1.0, 1.0);
    const auto b = RationalK::simple_pole(2.0, -I);
    const auto s = a * a + b;  // 1/(k-1)^2 + 2/(k+i)
    EXPECT_EQ(s.den_degree(), 3);
    for (cplx k : {cplx(0.2, 0.7), cplx(3.0, -1.0)}) {
        const cplx ref = 1.0 / ((k - 1.0) * (k - 1.0)) + 2.0 / (k + I);
        EXPECT_TRUE(complex_rel_near(s.evaluate(k), ref, 1e-14));
    }
}

// Property: field operations commute with evaluation at generic points.
TEST(RationalK, ArithmeticCommutesWithEvaluation) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    auto rnd = [&] { return cplx(u(rng), u(rng)); };
    for (int trial = 0; trial < 20; ++trial) {
        const RationalK a(poly({rnd(), rnd(), rnd()}), poly({rnd(), rnd(), 1.0}));
        const RationalK b = RationalK::simple_pole(rnd(), rnd()) * rnd();
        const cplx k = rnd() * 3.0;
        const cplx ak = a.evaluate(k), bk = b.evaluate(k);
        EXPECT_TRUE(complex_rel_near((a + b).evaluate(k), ak + bk, 1e-11));
        EXPECT_TRUE(complex_rel_near((a - b).evaluate(k), ak - bk, 1e-11));
        EXPECT_TRUE(complex_rel_near((a * b).evaluate(k), ak * bk, 1e-11));
    }
}

TEST(RationalK, SubtractionToZeroClearsDenominator) {
    const auto a = RationalK::simple_pole(2.0, I);
    const auto z = a - a;
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.den_factors().empty());
    EXPECT_EQ(z.evaluate(I), cplx{});
}

TEST(RationalK, EvaluateAtPoleThrows) {
    const auto r = RationalK::simple_pole(1.0, 0.5);
    try {
        r.evaluate(0.5);
        FAIL() << "expected SingularityError";
    } catch (const SingularityError& e) {
        EXPECT_EQ(e.kind(), SingularityError::Kind::PoleOrRemovable);
    }
}

TEST(RationalK, DeflateRemovesRemovableSingularity) {
    // (k^2 - 1)/(k - 1) = k + 1
    const RationalK r(poly({-1.0, 0.0, 1.0}), poly({-1.0, 1.0}));
    const auto d = r.deflate(1.0);
    EXPECT_EQ(d.den_degree(), 0);
    EXPECT_TRUE(complex_rel_near(d.evaluate(1.0), 2.0, 1e-15));
    EXPECT_TRUE(complex_rel_near(r.evaluate_deflated(1.0), 2.0, 1e-15));
}

TEST(RationalK, DeflateGenuinePoleThrows) {
    const auto r = RationalK::simple_pole(1.0, 0.5);
    try {
        (void)r.deflate(0.5);
        FAIL() << "expected SingularityError";
    } catch (const SingularityError& e) {
        EXPECT_EQ(e.kind(), SingularityError::Kind::GenuinePole);
        EXPECT_NEAR(e.magnitude(), 1.0, 1e-15);
    }
}

TEST(RationalK, DeflateDoublePoleThrows) {
    const auto p = RationalK::simple_pole(1.0, 0.5);
    RationalK r = p * p;
    r.multiply_by(PolynomialK::linear(0.5));  // (k - 1/2) / (k - 1/2)^2
    try {
        (void)r.deflate(0.5);
        FAIL() << "expected SingularityError";
    } catch (const SingularityError& e) {
        EXPECT_EQ(e.kind(), SingularityError::Kind::HigherOrder);
    }
}

TEST(RationalK, DeflateAwayFromDenominatorRootIsDomainError) {
    const auto r = RationalK::simple_pole(1.0, 0.5);
    EXPECT_THROW((void)r.deflate(2.0), DomainError);
}

TEST(RationalK, DegreeCapIsEnforced) {
    RationalK r = RationalK::simple_pole(1.0, 0.0, 3);
    r.divide_by_linear(1.0);
    r.divide_by_linear(2.0);
    EXPECT_THROW(r.divide_by_linear(3.0), DegreeCapError);
}

TEST(RationalK, ZeroDenominatorRejected) {
    EXPECT_THROW(RationalK(poly({1.0}), PolynomialK{}), DomainError);
}

}  // namespace
}  // namespace nlsdtn
