#pragma once

#include <cmath>
#include <numbers>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "nlsdtn/fourier_core.hpp"
#include "nlsdtn/hierarchy.hpp"

namespace nlsdtn::testing {

inline constexpr cplx I{0.0, 1.0};

inline ::testing::AssertionResult complex_rel_near(cplx value, cplx reference, double rel_tol) {
    const double err = std::abs(value - reference);
    const double scale = std::abs(reference);
    const double rel = scale > 0.0 ? err / scale : err;
    if (std::isfinite(rel) && rel <= rel_tol) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "value " << value << " reference " << reference << " rel err "
                                         << rel << " > " << rel_tol;
}

inline ::testing::AssertionResult complex_abs_near(cplx value, cplx reference, double abs_tol) {
    const double err = std::abs(value - reference);
    if (std::isfinite(err) && err <= abs_tol) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "value " << value << " reference " << reference << " abs err "
                                         << err << " > " << abs_tol;
}

inline ProblemSpec single_mode(double omega, int lambda, int harmonic, cplx amplitude, int order_max) {
    ProblemSpec s;
    s.omega = omega;
    s.lambda = lambda;
    s.order_max = order_max;
    s.dirichlet.set_omega(omega);
    s.dirichlet.set(1, harmonic, amplitude);
    return s;
}

inline ProblemSpec exponential_pair(double omega, int lambda, cplx alpha, cplx beta, int order_max) {
    ProblemSpec s = single_mode(omega, lambda, 1, alpha, order_max);
    s.dirichlet.set(1, -1, beta);
    return s;
}

inline cplx entry(const GradedCoefficients& c, int order, int harmonic) {
    const cplx* v = c.find(order, harmonic);
    return v ? *v : cplx{};
}

/// Spectral samples kept well away from every pole -k1(n), |n| <= radius.
inline std::vector<cplx> safe_k_samples(double omega, int radius, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.3, 2.0), ang(-std::numbers::pi, std::numbers::pi);
    std::vector<cplx> out;
    while (static_cast<int>(out.size()) < count) {
        const cplx k = std::polar(mag(rng) * std::sqrt(omega), ang(rng));
        bool ok = true;
        for (int n = -radius; n <= radius && ok; ++n) {
            ok = std::abs(k + k1(n, omega)) > 0.5 * std::sqrt(omega);
        }
        if (ok) out.push_back(k);
    }
    return out;
}

/// Crank-Nicolson for i u_t + u_xx = 0 on [0, L] with u(0,t) = g0(t), u(L,t) = 0.
/// Second order in dx and dt; used only as an independent check.
class CrankNicolsonOracle {
public:
    CrankNicolsonOracle(double length, int intervals, double dt)
        : J_(intervals), dx_(length / intervals), dt_(dt) {}

    std::vector<cplx> solve(const std::function<cplx(double)>& u0, const std::function<cplx(double)>& g0,
                            double t_end) const {
        std::vector<cplx> u(static_cast<std::size_t>(J_) + 1);
        for (int j = 0; j <= J_; ++j) u[j] = u0(j * dx_);
        const int steps = static_cast<int>(std::lround(t_end / dt_));
        // u_t = i u_xx:  (1 - r D) u^{n+1} = (1 + r D) u^n,  r = i dt / (2 dx^2)
        const cplx r = I * dt_ / (2.0 * dx_ * dx_);
        const int n = J_ - 1;
        std::vector<cplx> rhs(n), cp(n), dp(n);
        for (int s = 0; s < steps; ++s) {
            const double t1 = (s + 1) * dt_;
            for (int j = 1; j <= n; ++j) {
                rhs[j - 1] = u[j] + r * (u[j - 1] - 2.0 * u[j] + u[j + 1]);
            }
            rhs[0] += r * g0(t1);
            // Thomas algorithm, constant tridiagonal (-r, 1 + 2r, -r).
            const cplx diag = 1.0 + 2.0 * r, off = -r;
            cp[0] = off / diag;
            dp[0] = rhs[0] / diag;
            for (int j = 1; j < n; ++j) {
                const cplx m = diag - off * cp[j - 1];
                cp[j] = off / m;
                dp[j] = (rhs[j] - off * dp[j - 1]) / m;
            }
            u[n] = dp[n - 1];
            for (int j = n - 1; j >= 1; --j) u[j] = dp[j - 1] - cp[j - 1] * u[j + 1];
            u[0] = g0(t1);
            u[J_] = 0.0;
        }
        return u;
    }

    double dx() const { return dx_; }

private:
    int J_;
    double dx_;
    double dt_;
};

}  // namespace nlsdtn::testing
