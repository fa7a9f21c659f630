#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "nlsdtn/hierarchy.hpp"
#include "nlsdtn/linear_halfline.hpp"
#include "test_support.hpp"

namespace nlsdtn {
namespace {

using testing::complex_abs_near;
using testing::complex_rel_near;
using testing::I;

LinearProblemSpec constant_datum() {
    LinearProblemSpec s;
    s.g0 = [](double) { return cplx(1.0); };
    s.g0_dot = [](double) { return cplx(0.0); };
    return s;
}

LinearProblemSpec exponential_datum(double w) {
    LinearProblemSpec s;
    s.g0 = [w](double t) { return std::polar(1.0, w * t); };
    s.g0_dot = [w](double t) { return I * w * std::polar(1.0, w * t); };
    s.omega = w;
    return s;
}

// erfc(x / (2 sqrt(i t))), frozen from a 30-digit evaluation.
TEST(LinearHalfLine, ConstantDatumMatchesErfc) {
    struct Row {
        double x, t;
        cplx u;
    };
    const Row rows[] = {
        {0.5, 1.0, {0.79645227472547099, 0.19523874647837831}},
        {2.0, 3.0, {0.49365377685323992, 0.40478716903477907}},
        {1.0, 0.25, {0.03073578805578407, 0.47414763664099425}},
    };
    const auto spec = constant_datum();
    for (const auto& r : rows) {
        EXPECT_TRUE(complex_abs_near(solution_quarter_plane(spec, r.x, r.t), r.u, 1e-10)) << r.x << " " << r.t;
    }
}

// g1 for g0 = e^{it}, u0 = 0, frozen from a 30-digit evaluation of the Abel integral.
TEST(LinearHalfLine, ExponentialDatumNeumannFrozen) {
    const std::pair<double, cplx> rows[] = {
        {1.0, {-0.52365649036172373, -0.67284849196137447}},
        {5.0, {-0.27191553786318473, 0.97917931342765773}},
        {20.0, {-0.40603586112573482, -0.91057143815027437}},
    };
    const auto spec = exponential_datum(1.0);
    for (const auto& [t, g1] : rows) {
        EXPECT_TRUE(complex_abs_near(neumann_from_history(spec, t), g1, 1e-10)) << t;
        EXPECT_TRUE(complex_abs_near(neumann_via_contour(spec, t), g1, 1e-10)) << t;
    }
}

TEST(LinearHalfLine, ExactSolutionIsReproduced) {
    // u = e^{-x + it}
    auto spec = exponential_datum(1.0);
    spec.u0 = [](double x) { return cplx(std::exp(-x)); };
    spec.u0_prime = [](double x) { return cplx(-std::exp(-x)); };
    for (double t : {0.5, 2.0, 7.0}) {
        EXPECT_TRUE(complex_abs_near(neumann_from_history(spec, t), -std::polar(1.0, t), 1e-9)) << t;
        for (double x : {0.3, 1.5}) {
            EXPECT_TRUE(complex_abs_near(solution_quarter_plane(spec, x, t), std::exp(-x) * std::polar(1.0, t), 1e-9));
        }
    }
}

TEST(LinearHalfLine, AgreesWithCrankNicolson) {
    LinearProblemSpec spec;
    spec.u0 = [](double x) { return cplx(x * std::exp(-x)); };
    spec.u0_prime = [](double x) { return cplx((1.0 - x) * std::exp(-x)); };
    spec.g0 = [](double t) { return cplx(std::sin(t)); };
    spec.g0_dot = [](double t) { return cplx(std::cos(t)); };
    spec.omega = 1.0;
    const testing::CrankNicolsonOracle cn(40.0, 8000, 1e-3);
    const double T = 1.0;
    const auto u = cn.solve(spec.u0, spec.g0, T);
    for (double x : {0.5, 1.0, 2.5}) {
        const auto j = static_cast<std::size_t>(std::lround(x / cn.dx()));
        EXPECT_TRUE(complex_abs_near(solution_quarter_plane(spec, x, T), u[j], 2e-4)) << x;
    }
}

TEST(LinearHalfLine, ContourIdentity) {
    for (double x : {0.0, 1.0, 3.0}) {
        for (double t : {0.5, 1.0, 100.0}) {
            const auto id = contour_identity_check(x, t);
            EXPECT_LT(id.discrepancy, 1e-8) << x << " " << t;
            const cplx closed = -std::polar(1.0, -std::numbers::pi / 4) * std::sqrt(std::numbers::pi) /
                                (2.0 * std::sqrt(t)) * std::polar(1.0, x * x / (4 * t));
            EXPECT_TRUE(complex_rel_near(id.rhs, closed, 1e-14));
        }
    }
}

// Property: the contour may be rotated anywhere inside the decay sector.
TEST(LinearHalfLine, ContourRotationInvariance) {
    const auto spec = exponential_datum(2.0);
    ContourSpec narrow;
    narrow.rotation = std::numbers::pi / 6;
    for (double t : {1.0, 4.0}) {
        EXPECT_TRUE(complex_abs_near(neumann_via_contour(spec, t, narrow), neumann_via_contour(spec, t), 1e-9));
    }
}

TEST(LinearHalfLine, ConstantDatumAsymptote) {
    const auto spec = constant_datum();
    const double t = 1e4;
    const cplx scaled = neumann_from_history(spec, t) * std::sqrt(std::numbers::pi * t) *
                        std::polar(1.0, std::numbers::pi / 4);
    EXPECT_TRUE(complex_abs_near(scaled, -1.0, 1e-4));
}

TEST(LinearHalfLine, DtnCoefficients) {
    const std::map<int, cplx> a{{1, 1.0}, {-1, 1.0}, {2, 0.5 * I}, {-3, 0.25}};
    const double w = 1.7;
    const auto c = linear_dtn_coefficients(a, w);
    ASSERT_EQ(c.size(), a.size());
    for (const auto& [n, v] : c) {
        EXPECT_TRUE(complex_rel_near(v, 2.0 * I * k1(n, w) * a.at(n), 1e-13));
    }
    EXPECT_TRUE(complex_rel_near(c.at(2), -std::sqrt(2 * w) * 0.5 * I, 1e-14));
    EXPECT_TRUE(complex_rel_near(c.at(-3), I * std::sqrt(3 * w) * 0.25, 1e-14));
}

TEST(LinearHalfLine, DecayFitRecoversSyntheticPowerLaw) {
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 10; ++i) {
        const double t = 10.0 * std::pow(2.0, i);
        samples.emplace_back(t, 3.0 * std::pow(t, -1.5));
    }
    const auto fit = decay_rate_fit(samples);
    EXPECT_NEAR(fit.exponent, -1.5, 1e-12);
    EXPECT_NEAR(fit.intercept, std::log(3.0), 1e-10);
    EXPECT_LT(fit.rms_residual, 1e-12);
    samples.resize(5);
    EXPECT_THROW(decay_rate_fit(samples), DomainError);
}

TEST(LinearHalfLine, InvalidInputsRejected) {
    auto spec = constant_datum();
    EXPECT_THROW(neumann_from_history(spec, -1.0), DomainError);
    spec.rel_tol = 0.0;
    EXPECT_THROW(spec.validate(), DomainError);
    ContourSpec c;
    c.rotation = 2.0;
    EXPECT_THROW(c.validate(), DomainError);
}

}  // namespace
}  // namespace nlsdtn
