#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "nlsdtn/fourier_core.hpp"
#include "test_support.hpp"

namespace nlsdtn {
namespace {

using testing::complex_abs_near;

GradedCoefficients random_series(unsigned seed, int orders, int radius) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::bernoulli_distribution keep(0.6);
    GradedCoefficients s;
    for (int N = 1; N <= orders; ++N) {
        for (int n = -radius; n <= radius; ++n) {
            if (keep(rng)) s.set(N, n, {u(rng), u(rng)});
        }
    }
    return s;
}

// Direct quadruple loop over every stored key; no row lookups.
cplx brute_cauchy(const GradedCoefficients& x, const GradedCoefficients& y, int order, int harmonic) {
    cplx acc{};
    for (const auto& [kx, vx] : x) {
        for (const auto& [ky, vy] : y) {
            if (kx.order + ky.order == order && kx.harmonic + ky.harmonic == harmonic) acc += vx * vy;
        }
    }
    return acc;
}

cplx brute_triple(const GradedCoefficients& xbar, const GradedCoefficients& y, const GradedCoefficients& z,
                  int order, int harmonic) {
    cplx acc{};
    for (const auto& [kx, vx] : xbar) {
        for (const auto& [ky, vy] : y) {
            for (const auto& [kz, vz] : z) {
                if (kx.order + ky.order + kz.order != order) continue;
                if (kz.harmonic != harmonic + kx.harmonic - ky.harmonic) continue;
                acc += vx * vy * vz;
            }
        }
    }
    return acc;
}

TEST(FourierCore, SetRejectsOrderZero) {
    GradedCoefficients s;
    EXPECT_THROW(s.set(0, 1, 1.0), DomainError);
}

TEST(FourierCore, RowIsSortedByHarmonic) {
    GradedCoefficients s;
    s.set(2, 3, 1.0);
    s.set(2, -1, 2.0);
    s.set(1, 0, 3.0);
    s.set(3, -5, 4.0);
    const auto row = s.row(2);
    ASSERT_EQ(row.size(), 2u);
    EXPECT_EQ(row[0].first, -1);
    EXPECT_EQ(row[1].first, 3);
    EXPECT_EQ(s.max_order(), 3);
    EXPECT_EQ(harmonic_radius(s, 3), 5);
    EXPECT_EQ(harmonic_radius(s, 7), 0);
}

TEST(FourierCore, CauchyMatchesBruteForce) {
    const auto x = random_series(1, 4, 3);
    const auto y = random_series(2, 4, 3);
    for (int N = 2; N <= 6; ++N) {
        for (int n = -7; n <= 7; ++n) {
            EXPECT_TRUE(complex_abs_near(graded_bilinear_convolution(x, y, N, n), brute_cauchy(x, y, N, n), 1e-13))
                << "N=" << N << " n=" << n;
            EXPECT_TRUE(complex_abs_near(graded_convolution(IndexRule::Cauchy, x, y, nullptr, N, n),
                                         brute_cauchy(x, y, N, n), 1e-13));
        }
    }
}

TEST(FourierCore, TripleMatchesBruteForce) {
    const auto x = random_series(3, 3, 2);
    const auto y = random_series(4, 3, 2);
    const auto z = random_series(5, 3, 2);
    const auto xbar = conjugate_grade(x);
    for (int N = 3; N <= 7; ++N) {
        for (int n = -7; n <= 7; ++n) {
            const cplx ref = brute_triple(xbar, y, z, N, n);
            EXPECT_TRUE(complex_abs_near(graded_triple_convolution(xbar, y, z, N, n), ref, 1e-13));
            EXPECT_TRUE(
                complex_abs_near(graded_convolution(IndexRule::ConjugateTriple, xbar, y, &z, N, n), ref, 1e-13));
        }
    }
}

TEST(FourierCore, TripleRowAgreesWithPointwiseTriple) {
    const auto x = random_series(6, 3, 2);
    const auto y = random_series(7, 3, 2);
    const auto z = random_series(8, 3, 2);
    const auto xbar = conjugate_grade(x);
    const auto row = triple_product_row<cplx>(xbar, y, z, 5, [](cplx a, cplx b, cplx c) { return a * b * c; });
    for (const auto& [n, v] : row) {
        EXPECT_TRUE(complex_abs_near(v, brute_triple(xbar, y, z, 5, n), 1e-13)) << "n=" << n;
    }
}

// Property: the Cauchy rule is the coefficient map of pointwise multiplication.
TEST(FourierCore, CauchyIsPointwiseProduct) {
    const auto x = random_series(9, 2, 2);
    const auto y = random_series(10, 2, 2);
    GradedCoefficients prod;
    for (int N = 2; N <= 4; ++N) {
        for (int n = -4; n <= 4; ++n) {
            const cplx v = graded_bilinear_convolution(x, y, N, n);
            if (v != cplx{}) prod.set(N, n, v);
        }
    }
    for (double eps : {0.3, 0.9}) {
        for (double t : {0.0, 0.7, 2.9}) {
            EXPECT_TRUE(complex_abs_near(evaluate_series(prod, eps, t),
                                         evaluate_series(x, eps, t) * evaluate_series(y, eps, t), 1e-12));
        }
    }
}

// Property: conjugation keeps harmonics, so evaluating the conjugated series at
// t gives conj of the original evaluated at -t.
TEST(FourierCore, ConjugateGradeReflectsTime) {
    const auto x = random_series(11, 3, 3);
    const auto xbar = conjugate_grade(x);
    EXPECT_EQ(xbar.size(), x.size());
    for (double t : {0.4, 1.3}) {
        EXPECT_TRUE(complex_abs_near(evaluate_series(xbar, 0.5, t), std::conj(evaluate_series(x, 0.5, -t)), 1e-13));
    }
}

TEST(FourierCore, EvaluateSeriesClosedForm) {
    GradedCoefficients s(2.0);
    s.set(1, 1, 1.0);
    s.set(3, -2, {0.0, 1.0});
    const double eps = 0.2, t = 0.3;
    const cplx ref = eps * std::polar(1.0, 2.0 * t) + testing::I * std::pow(eps, 3) * std::polar(1.0, -4.0 * t);
    EXPECT_TRUE(complex_abs_near(evaluate_series(s, eps, t), ref, 1e-15));
}

}  // namespace
}  // namespace nlsdtn
