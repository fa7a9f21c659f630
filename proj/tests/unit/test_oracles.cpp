#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "nlsdtn/hierarchy.hpp"
#include "nlsdtn/oracles.hpp"
#include "test_support.hpp"

namespace nlsdtn {
namespace {

using testing::complex_abs_near;
using testing::complex_rel_near;
using testing::entry;
using testing::I;

TEST(Solitons, OneSolitonIsStationary) {
    const StationarySolitonSpec s{2.0, 0.4};
    const cplx a = one_soliton_field(s, 0.3, 0.0);
    const cplx b = one_soliton_field(s, 0.3, 1.7);
    EXPECT_NEAR(std::abs(a), std::abs(b), 1e-15);
    EXPECT_TRUE(complex_rel_near(b, a * std::polar(1.0, 2.0 * 1.7), 1e-14));
    EXPECT_THROW(one_soliton_field({-1.0, 0.0}, 0.0, 0.0), DomainError);
}

// N = 1: det R / det M reduces to 2 i eta g / (1 + |g|^2).
TEST(Solitons, SingleEigenvalueReduction) {
    const double eta = 1.3;
    const cplx c{0.4, -0.9};
    SolitonSpec spec{{cplx(0.0, eta)}, {c}};
    for (double x : {0.0, 0.8, 2.0}) {
        for (double t : {0.0, 0.6}) {
            const cplx g = c * std::exp(-eta * x + I * eta * eta * t);
            const cplx ref = 2.0 * I * eta * g / (1.0 + std::norm(g));
            EXPECT_TRUE(complex_rel_near(n_soliton_field(spec, x, t), ref, 1e-13));
            // |q| = eta sech(eta x - log|c|)
            EXPECT_NEAR(std::abs(n_soliton_field(spec, x, t)), eta / std::cosh(eta * x - std::log(std::abs(c))), 1e-13);
        }
    }
}

// Independent 2x2 / 3x3 cofactor expansion for the {i, 2i} family.
cplx two_soliton_cofactor(double eps, double x, double t) {
    const cplx l1{0.0, 1.0}, l2{0.0, 2.0};
    const cplx g1 = -I * eps * std::exp(I * (l1 * x - l1 * l1 * t));
    const cplx g2 = -I * eps * std::exp(I * (l2 * x - l2 * l2 * t));
    auto m = [](cplx gn, cplx gk, cplx ln, cplx lk) { return (1.0 + std::conj(gk) * gn) / (std::conj(ln) - lk); };
    const cplx m11 = m(g1, g1, l1, l1), m12 = m(g1, g2, l1, l2), m21 = m(g2, g1, l2, l1), m22 = m(g2, g2, l2, l2);
    const cplx det_m = m11 * m22 - m12 * m21;
    // R = [[m11, m12, g1], [m21, m22, g2], [1, 1, 0]]
    const cplx det_r = 1.0 * (m12 * g2 - g1 * m22) - 1.0 * (m11 * g2 - g1 * m21);
    return det_r / det_m;
}

TEST(Solitons, TwoSolitonMatchesCofactorFormula) {
    const auto spec = two_soliton_spec(0.1);
    for (double t : {0.0, 0.9, 3.1}) {
        for (double x : {0.0, 0.5}) {
            EXPECT_TRUE(complex_rel_near(n_soliton_field(spec, x, t), two_soliton_cofactor(0.1, x, t), 1e-12));
        }
    }
}

// Eigenvalues {i, 2i} give |q| periodic with period 2 pi / (4 - 1) and q itself 2 pi periodic.
TEST(Solitons, TwoSolitonBoundaryValuesArePeriodic) {
    const auto spec = two_soliton_spec(0.3);
    for (double t : {0.2, 1.1}) {
        EXPECT_TRUE(complex_abs_near(n_soliton_field(spec, 0.0, t + 2 * std::numbers::pi),
                                     n_soliton_field(spec, 0.0, t), 1e-12));
        EXPECT_TRUE(complex_abs_near(n_soliton_derivative(spec, 0.0, t + 2 * std::numbers::pi),
                                     n_soliton_derivative(spec, 0.0, t), 1e-9));
    }
}

TEST(Solitons, FiniteDifferenceMatchesStationaryDerivative) {
    // eta = 1, c = e^gamma: q(x, 0) = i sech(x - gamma), so u_x(0) = i sgn(gamma) alpha sqrt(1 - alpha^2).
    for (double gamma : {0.7, -0.7}) {
        SolitonSpec spec{{cplx(0.0, 1.0)}, {std::exp(gamma)}};
        const double alpha = 1.0 / std::cosh(gamma);
        const cplx ref = I * std::copysign(1.0, gamma) * alpha * std::sqrt(1.0 - alpha * alpha);
        EXPECT_TRUE(complex_abs_near(n_soliton_derivative(spec, 0.0, 0.0), ref, 1e-8)) << gamma;
    }
}

TEST(Solitons, SpecValidation) {
    EXPECT_THROW(n_soliton_field(SolitonSpec{{cplx(1.0, -1.0)}, {1.0}}, 0, 0), DomainError);
    EXPECT_THROW(n_soliton_field(SolitonSpec{{I, I}, {1.0, 1.0}}, 0, 0), DomainError);
    EXPECT_THROW(n_soliton_field(SolitonSpec{{I}, {0.0}}, 0, 0), DomainError);
    EXPECT_THROW(n_soliton_field(SolitonSpec{{I}, {}}, 0, 0), DomainError);
}

TEST(Solitons, ExpansionRecoversTables) {
    const std::vector<double> eps{0.0005, 0.001, 0.002, 0.004, 0.008};
    const auto ex = two_soliton_expansion(eps);
    const std::pair<std::pair<int, int>, double> a_ref[] = {{{1, 1}, -6}, {{1, 4}, 12}, {{3, -2}, -48},
                                                            {{3, 1}, 198}, {{3, 4}, -252}, {{3, 7}, 96}};
    const std::pair<std::pair<int, int>, double> c_ref[] = {{{1, 1}, 6}, {{1, 4}, -24}, {{3, -2}, 192},
                                                            {{3, 1}, -882}, {{3, 4}, 1224}, {{3, 7}, -480}};
    for (const auto& [key, v] : a_ref) {
        EXPECT_TRUE(complex_rel_near(entry(ex.dirichlet, key.first, key.second), v, 1e-6));
    }
    for (const auto& [key, v] : c_ref) {
        EXPECT_TRUE(complex_rel_near(entry(ex.neumann, key.first, key.second), v, 1e-6));
    }
    EXPECT_LT(ex.max_fit_residual, 1e-8);
    EXPECT_GT(ex.condition_number, 1.0);
}

TEST(Solitons, ExpansionRejectsTooFewEpsilons) {
    const std::vector<double> eps{0.01, 0.02, 0.03};
    EXPECT_THROW(two_soliton_expansion(eps), DomainError);
    const std::vector<double> dup{0.01, 0.01, 0.02, 0.03};
    EXPECT_THROW(two_soliton_expansion(dup), DomainError);
}

TEST(ClosedFormBranch, Examples) {
    EXPECT_TRUE(complex_rel_near(closed_form_branch(0.6, 1.0, Branch::FocusingA), -0.6 * 0.8, 1e-15));
    EXPECT_TRUE(complex_rel_near(closed_form_branch(0.6, 1.0, Branch::FocusingA, 1, 1), 0.6 * 0.8, 1e-15));
    EXPECT_TRUE(complex_rel_near(closed_form_branch(0.5, -2.0, Branch::FocusingB), I * 0.5 * std::sqrt(2.5), 1e-15));
    EXPECT_TRUE(complex_rel_near(closed_form_branch(0.3, 1.0, Branch::PerturbativeSum, -1), -0.3 * std::sqrt(0.91),
                                 1e-15));
    EXPECT_EQ(closed_form_branch(0.0, 1.0, Branch::FocusingB), cplx{});
}

// Each focusing branch exists on one side of the omega axis only.
TEST(ClosedFormBranch, Dichotomy) {
    const double alpha = 0.5;
    EXPECT_THROW(closed_form_branch(alpha, 0.2, Branch::FocusingA), DomainError);
    EXPECT_THROW(closed_form_branch(alpha, -1.0, Branch::FocusingB), DomainError);
    EXPECT_NO_THROW(closed_form_branch(alpha, -1.5, Branch::FocusingB));
    EXPECT_NO_THROW(closed_form_branch(alpha, 0.25, Branch::FocusingA));
    EXPECT_THROW(closed_form_branch(alpha, 0.2, Branch::PerturbativeSum, -1), DomainError);
    EXPECT_THROW(closed_form_branch(-alpha, 1.0, Branch::FocusingA), DomainError);
}

// The perturbative branch is the sum of the single-exponential hierarchy.
TEST(ClosedFormBranch, PerturbativeSumMatchesHierarchy) {
    for (int lam : {-1, 1}) {
        const auto sol = solve(testing::single_mode(1.0, lam, 1, 1.0, 7));
        const double eps = 0.05;
        cplx partial{};
        for (int N = 1; N <= 7; N += 2) partial += entry(sol.neumann, N, 1) * std::pow(eps, N);
        EXPECT_LT(std::abs(partial - closed_form_branch(eps, 1.0, Branch::PerturbativeSum, lam)), 1e-11);
    }
}

TEST(PaperTable, FirstOrderIsLinear) {
    const cplx alpha{0.7, 0.2}, beta{-0.3, 0.5};
    const auto t = paper_c_table(alpha, beta, 2.5, -1);
    EXPECT_TRUE(complex_rel_near(entry(t, 1, 1), -std::sqrt(2.5) * alpha, 1e-14));
    EXPECT_TRUE(complex_rel_near(entry(t, 1, -1), I * std::sqrt(2.5) * beta, 1e-14));
}

}  // namespace
}  // namespace nlsdtn
