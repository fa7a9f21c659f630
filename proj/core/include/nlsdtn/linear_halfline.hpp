#pragma once

// Free Schrodinger equation i u_t + u_xx = 0 on the quarter plane x, t > 0:
// interior solution, Neumann value from Dirichlet history, the linear
// Fourier-coefficient Dirichlet-to-Neumann map and long-time rate fits.

#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "nlsdtn/error.hpp"

namespace nlsdtn {

using cplx = std::complex<double>;
using ComplexFunction = std::function<cplx(double)>;

struct LinearProblemSpec {
    /// Initial datum and its derivative on [0, inf). Empty means zero.
    ComplexFunction u0;
    ComplexFunction u0_prime;
    /// e-folding length of u0; spatial integrals stop at 40 * u0_decay.
    double u0_decay = 1.0;
    /// Dirichlet history and its time derivative. Empty means zero.
    ComplexFunction g0;
    ComplexFunction g0_dot;
    /// Dominant angular frequency of g0; only sizes quadrature panels.
    double omega = 0.0;
    /// Relative accuracy requested from every quadrature.
    double rel_tol = 1e-12;

    void validate() const;
};

/// Deformed version of the boundary of the third quadrant: its two rays
/// (along -i*inf and -inf) are rotated by `rotation` radians into the sectors
/// where e^{-4ik^2 t} decays. rotation = pi/4 gives the steepest-descent rays.
struct ContourSpec {
    double rotation = std::numbers::pi / 4.0;
    /// Beyond this radius (in units of 1/(2 sqrt t)) the ray integral is
    /// evaluated with the reciprocal map r = R / v. <= 0 selects automatically.
    double tail_radius = 0.0;
    double rel_tol = 1e-12;

    void validate() const;
};

/// Three-term Neumann formula with the Abel substitution s = t - sigma^2.
cplx neumann_from_history(const LinearProblemSpec& spec, double t);

/// Neumann formula built on the contour integral of
/// g0(t) - f(k) int_0^t e^{f(k)(s-t)} g0(s) ds, f(k) = 4ik^2.
cplx neumann_via_contour(const LinearProblemSpec& spec, double t, const ContourSpec& contour = {});

/// u(x,t) from the initial datum and the Dirichlet history.
cplx solution_quarter_plane(const LinearProblemSpec& spec, double x, double t);

/// c_n = -sqrt(n omega) a_n (n > 0), i sqrt(-n omega) a_n (n < 0).
std::map<int, cplx> linear_dtn_coefficients(const std::map<int, cplx>& a, double omega);

struct IdentityCheck {
    cplx lhs;
    cplx rhs;
    double discrepancy;
};

/// Quadrature of int e^{-f(k)t - 2ikx} dk over the (rotated) contour against
/// its closed form -e^{-i pi/4} sqrt(pi) / (2 sqrt t) e^{i x^2 / 4t}.
IdentityCheck contour_identity_check(double x, double t, const ContourSpec& contour = {});

struct DecayFit {
    double exponent;   // least-squares slope of log deviation against log t
    double intercept;  // log prefactor
    double rms_residual;
};

/// Requires at least 8 samples with t > 0 and deviation > 0.
DecayFit decay_rate_fit(const std::vector<std::pair<double, double>>& samples);

}  // namespace nlsdtn
