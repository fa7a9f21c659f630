#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "nlsdtn/oracles.hpp"

namespace nlsdtn {

namespace {

using State = std::array<cplx, 4>;  // column-major 2x2 fundamental matrix

}  // namespace

}  // namespace nlsdtn

// odeint needs vector-space algebra on std::array<complex>; the range algebra
// handles it once the element norm is known.
namespace boost::numeric::odeint {
template <>
struct vector_space_norm_inf<nlsdtn::State> {
    using result_type = double;
    double operator()(const nlsdtn::State& s) const {
        double m = 0.0;
        for (const auto& v : s) m = std::max(m, std::abs(v));
        return m;
    }
};
}  // namespace boost::numeric::odeint

namespace nlsdtn {

FloquetResult floquet_monodromy(const GradedCoefficients& g0b, const GradedCoefficients& g1b,
                                double epsilon, double omega, int lambda, cplx k,
                                const FloquetOptions& opt) {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("floquet: omega must be positive");
    if (lambda != 1 && lambda != -1) throw DomainError("floquet: lambda must be +1 or -1");
    if (!std::isfinite(epsilon)) throw DomainError("floquet: epsilon must be finite");
    if (!(opt.abs_tol > 0.0) || !(opt.rel_tol > 0.0)) throw DomainError("floquet: tolerances must be positive");

    const double tau = 2.0 * std::numbers::pi / omega;
    const cplx I{0.0, 1.0};
    const double lam = lambda;
    const cplx k2 = k * k;

    auto rhs = [&](const State& psi, State& dpsi, double t) {
        const cplx g0 = evaluate_series(g0b, epsilon, t);
        const cplx g1 = evaluate_series(g1b, epsilon, t);
        const double m2 = std::norm(g0);
        // A = -2ik^2 sigma_3 + V^b
        const cplx a11 = -2.0 * I * k2 - I * lam * m2;
        const cplx a12 = 2.0 * k * g0 + I * g1;
        const cplx a21 = 2.0 * lam * k * std::conj(g0) - I * lam * std::conj(g1);
        const cplx a22 = 2.0 * I * k2 + I * lam * m2;
        for (int col = 0; col < 2; ++col) {
            const cplx p1 = psi[2 * col];
            const cplx p2 = psi[2 * col + 1];
            dpsi[2 * col] = a11 * p1 + a12 * p2;
            dpsi[2 * col + 1] = a21 * p1 + a22 * p2;
        }
    };

    namespace ode = boost::numeric::odeint;
    using Stepper = ode::runge_kutta_dopri5<State, double, State, double, ode::array_algebra>;
    auto stepper = ode::make_dense_output(opt.abs_tol, opt.rel_tol, Stepper{});

    State psi{cplx{1.0}, cplx{}, cplx{}, cplx{1.0}};
    std::size_t steps = 0;
    const double dt0 = tau / 1000.0;
    stepper.initialize(psi, 0.0, dt0);
    while (stepper.current_time() < tau) {
        if (++steps > opt.max_steps) {
            throw NumericalError("floquet: step budget exhausted at t = " +
                                 std::to_string(stepper.current_time()));
        }
        stepper.do_step(rhs);
    }
    stepper.calc_state(tau, psi);
    for (const auto& v : psi) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NumericalError("floquet: non-finite monodromy");
        }
    }

    FloquetResult out;
    out.monodromy << psi[0], psi[2], psi[1], psi[3];
    const cplx tr = psi[0] + psi[3];
    out.discriminant = tr * tr - 4.0;
    out.steps = steps;
    return out;
}

}  // namespace nlsdtn
