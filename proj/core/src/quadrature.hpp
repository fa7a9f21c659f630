#pragma once

// Thin wrapper over Boost's adaptive Gauss-Kronrod rule for complex-valued
// integrands on finite panels. Internal to the library.

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nlsdtn::detail {

using cplx = std::complex<double>;

struct QuadratureTolerance {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    unsigned max_depth = 15;
};

struct QuadratureResult {
    cplx value{};
    double error = 0.0;  // summed Kronrod error estimate
    double l1 = 0.0;     // integral of |f|, the scale of attainable accuracy
};

using ComplexIntegrand = std::function<cplx(double)>;

QuadratureResult integrate(const ComplexIntegrand& f, double a, double b,
                           const QuadratureTolerance& tol = {});

/// Sum over consecutive panels [b_i, b_{i+1}].
QuadratureResult integrate_panels(const ComplexIntegrand& f, std::span<const double> breaks,
                                  const QuadratureTolerance& tol = {});

/// Throws NumericalError naming `what` when the estimate exceeds the
/// tolerance by more than a safety margin.
void require_converged(const QuadratureResult& r, const QuadratureTolerance& tol,
                       const std::string& what);

/// Breakpoints b_0 = a < ... < b_m = b chosen so that phi(b_{i+1}) - phi(b_i)
/// is about `step` for the monotone phase phi(x) = alpha * x^2 (alpha > 0).
std::vector<double> quadratic_phase_breaks(double a, double b, double alpha, double step,
                                           std::size_t max_panels = 400000);

std::vector<double> uniform_breaks(double a, double b, std::size_t panels);

}  // namespace nlsdtn::detail
