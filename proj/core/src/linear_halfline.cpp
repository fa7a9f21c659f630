#include "nlsdtn/linear_halfline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "quadrature.hpp"

namespace nlsdtn {

namespace {

using detail::QuadratureTolerance;
using std::numbers::pi;

constexpr cplx I{0.0, 1.0};
const cplx kPhaseMinusQuarter = std::polar(1.0, -pi / 4.0);  // e^{-i pi/4}
constexpr double kDecayLengths = 40.0;

cplx call(const ComplexFunction& f, double x) { return f ? f(x) : cplx{}; }

QuadratureTolerance tolerance(double rel_tol) {
    QuadratureTolerance tol;
    tol.rel_tol = rel_tol;
    tol.abs_tol = 1e-15;
    return tol;
}

std::vector<double> merge_breaks(std::vector<double> a, const std::vector<double>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end(), [](double p, double q) {
                return std::abs(p - q) <= 1e-14 * std::max(1.0, std::abs(p));
            }),
            a.end());
    return a;
}

void require_time(double t, const char* what) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError(std::string(what) + ": t must be positive and finite");
    }
}

// int_0^X e^{i x^2 / 4t} u0'(x) dx
cplx fresnel_term(const LinearProblemSpec& spec, double t) {
    if (!spec.u0_prime) return {};
    const double X = kDecayLengths * spec.u0_decay;
    auto breaks = merge_breaks(detail::quadratic_phase_breaks(0.0, X, 1.0 / (4.0 * t), pi),
                               detail::uniform_breaks(0.0, X, 2 * static_cast<std::size_t>(kDecayLengths)));
    const auto tol = tolerance(spec.rel_tol);
    auto r = detail::integrate_panels(
        [&](double x) { return std::polar(1.0, x * x / (4.0 * t)) * spec.u0_prime(x); }, breaks,
        tol);
    detail::require_converged(r, tol, "Fresnel integral of u0'");
    return r.value;
}

double oscillation_rate(const LinearProblemSpec& spec) { return std::max(std::abs(spec.omega), 1.0); }

struct Ray {
    double angle;  // direction of k = r e^{i angle}
    double sign;   // +1 outward, -1 inward
};

// The two rays of the third-quadrant boundary rotated into the decay sectors:
// along angle -pi/2 + theta traversed inward, then angle pi - theta outward.
std::array<Ray, 2> rays(const ContourSpec& c) {
    return {Ray{-pi / 2.0 + c.rotation, -1.0}, Ray{pi - c.rotation, +1.0}};
}

// int_0^inf sum_rays sign * phi(k) e^{i angle} dr, with r in units of r_scale.
template <class Integrand>
cplx ray_integral(const ContourSpec& contour, double r_scale, double feature_radius,
                  Integrand&& phi, const char* what) {
    const auto tol = tolerance(contour.rel_tol);
    const auto rs = rays(contour);

    auto combined = [&](double r) {
        cplx acc{};
        for (const auto& ray : rs) {
            const cplx dir = std::polar(1.0, ray.angle);
            acc += ray.sign * phi(r * dir) * dir;
        }
        return acc;
    };

    // Panels in rho = r / r_scale: geometric from 1/16 up to the tail radius.
    const double rho_feature = std::max(1.0, feature_radius / r_scale);
    const double rho_tail = contour.tail_radius > 0.0 ? contour.tail_radius : 16.0 * rho_feature;
    std::vector<double> breaks{0.0};
    for (double rho = 1.0 / 16.0; rho < rho_tail; rho *= 2.0) breaks.push_back(rho * r_scale);
    breaks.push_back(rho_tail * r_scale);

    auto body = detail::integrate_panels(combined, breaks, tol);
    detail::require_converged(body, tol, what);

    // Tail: r = R / v, v in (0, 1].
    const double R = rho_tail * r_scale;
    auto tail = detail::integrate(
        [&](double v) {
            const double r = R / v;
            return combined(r) * (R / (v * v));
        },
        0.0, 1.0, tol);
    detail::require_converged(tail, tol, what);
    return body.value + tail.value;
}

}  // namespace

void LinearProblemSpec::validate() const {
    if (!(u0_decay > 0.0) || !std::isfinite(u0_decay)) {
        throw DomainError("linear problem: u0_decay must be positive");
    }
    if (!(rel_tol > 0.0)) throw DomainError("linear problem: rel_tol must be positive");
    if (!std::isfinite(omega)) throw DomainError("linear problem: omega must be finite");
    if (static_cast<bool>(u0) != static_cast<bool>(u0_prime)) {
        throw DomainError("linear problem: u0 and u0_prime must be given together");
    }
    if (static_cast<bool>(g0) != static_cast<bool>(g0_dot)) {
        throw DomainError("linear problem: g0 and g0_dot must be given together");
    }
}

void ContourSpec::validate() const {
    if (!(rotation > 0.0 && rotation < pi / 2.0)) {
        throw DomainError("contour: rotation must lie strictly between 0 and pi/2");
    }
    if (!(rel_tol > 0.0)) throw DomainError("contour: rel_tol must be positive");
}

cplx neumann_from_history(const LinearProblemSpec& spec, double t) {
    spec.validate();
    require_time(t, "neumann_from_history");
    const double sqrt_t = std::sqrt(t);

    cplx abel{};
    if (spec.g0_dot) {
        // int_0^t g0'(s) / sqrt(t - s) ds = 2 int_0^sqrt(t) g0'(t - sigma^2) d sigma
        const double step = pi / oscillation_rate(spec);
        const auto breaks = detail::quadratic_phase_breaks(0.0, sqrt_t, 1.0, step);
        const auto tol = tolerance(spec.rel_tol);
        auto r = detail::integrate_panels(
            [&](double sigma) { return spec.g0_dot(t - sigma * sigma); }, breaks, tol);
        detail::require_converged(r, tol, "Abel integral of g0'");
        abel = 2.0 * r.value;
    }

    const cplx jump = call(spec.u0, 0.0) - call(spec.g0, 0.0);
    const cplx bracket = jump / sqrt_t + fresnel_term(spec, t) / sqrt_t - abel;
    return kPhaseMinusQuarter / std::sqrt(pi) * bracket;
}

cplx neumann_via_contour(const LinearProblemSpec& spec, double t, const ContourSpec& contour) {
    spec.validate();
    contour.validate();
    require_time(t, "neumann_via_contour");

    const cplx local = kPhaseMinusQuarter / std::sqrt(pi * t) * (call(spec.u0, 0.0) + fresnel_term(spec, t));
    if (!spec.g0) return local;

    const cplx g0_t = spec.g0(t);
    const cplx g0_start = spec.g0(0.0);
    const double rate = oscillation_rate(spec);
    const auto tol = tolerance(contour.rel_tol);

    // h = g0(t) - f int_0^t e^{f(s-t)} g0(s) ds, written after one integration
    // by parts as e^{-ft} g0(0) + int_0^t e^{-f tau} g0'(t - tau) d tau, which
    // avoids the cancellation between g0(t) and the integral at large |k|.
    auto h = [&](cplx k) -> cplx {
        const cplx f = 4.0 * I * k * k;
        if (f == cplx{}) return g0_t;
        const double tau_max = std::min(t, kDecayLengths / f.real());
        const auto panels = static_cast<std::size_t>(
            std::ceil((rate + std::abs(f.imag())) * tau_max / pi + f.real() * tau_max / 4.0));
        const auto breaks = detail::uniform_breaks(0.0, tau_max, panels);
        auto r = detail::integrate_panels(
            [&](double tau) { return std::exp(-f * tau) * spec.g0_dot(t - tau); }, breaks, tol);
        detail::require_converged(r, tol, "contour inner integral");
        return std::exp(-f * t) * g0_start + r.value;
    };

    const double r_scale = 1.0 / (2.0 * std::sqrt(t));
    const double feature = std::sqrt(std::abs(spec.omega)) / 2.0;
    const cplx contour_term = ray_integral(contour, r_scale, feature, h, "neumann_via_contour");
    return local + 2.0 / pi * contour_term;
}

cplx solution_quarter_plane(const LinearProblemSpec& spec, double x, double t) {
    spec.validate();
    require_time(t, "solution_quarter_plane");
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("solution_quarter_plane: x must be nonnegative and finite");
    }
    if (x == 0.0) return call(spec.g0, t);
    const auto tol = tolerance(spec.rel_tol);

    // Initial-datum part: the real-line and contour k-integrals collapse to the
    // odd-extension propagator G(x-y) - G(x+y).
    cplx initial{};
    if (spec.u0) {
        const double X = kDecayLengths * spec.u0_decay;
        const cplx pref = kPhaseMinusQuarter / (2.0 * std::sqrt(pi * t));
        auto z_breaks = detail::quadratic_phase_breaks(x, x + X, 1.0 / (4.0 * t), pi);
        for (double& z : z_breaks) z -= x;
        z_breaks.front() = 0.0;
        z_breaks.back() = X;
        const auto breaks = merge_breaks(
            std::move(z_breaks), detail::uniform_breaks(0.0, X, 2 * static_cast<std::size_t>(kDecayLengths)));
        auto r = detail::integrate_panels(
            [&](double y) {
                const double dm = x - y;
                const double dp = x + y;
                return spec.u0(y) * (std::polar(1.0, dm * dm / (4.0 * t)) -
                                     std::polar(1.0, dp * dp / (4.0 * t)));
            },
            breaks, tol);
        detail::require_converged(r, tol, "initial-datum propagator");
        initial = pref * r.value;
    }
    if (!spec.g0) return initial;

    // Boundary part: the contour integral around the removable point k = 0
    // reduces to the Duhamel integral of g0 against d/dtau erfc(x / 2 sqrt(i tau)).
    // With w = x^2 / 4 tau it reads
    //   (i pi)^{-1/2} int_{w0}^inf g0(t - x^2/4w) e^{iw} w^{-1/2} dw,  w0 = x^2 / 4t.
    // The two leading terms of g0(t - s) in s are integrated in closed form.
    const double w0 = x * x / (4.0 * t);
    const cplx g0_t = spec.g0(t);
    const cplx g0_dot_t = spec.g0_dot(t);
    const double rate = oscillation_rate(spec);

    // T(w0) = int_{w0}^inf e^{iw} w^{-1/2} dw, rotated to w = w0 + i y, y = v^2.
    std::vector<double> v_breaks{0.0};
    for (double c : {0.25, 1.0, 4.0}) {
        const double b = c * std::sqrt(w0);
        if (b > 0.0 && b < 7.0) v_breaks.push_back(b);
    }
    v_breaks.push_back(7.0);
    v_breaks = merge_breaks(std::move(v_breaks), {});
    auto tr = detail::integrate_panels(
        [&](double v) { return std::exp(-v * v) * v / std::sqrt(cplx(w0, v * v)); }, v_breaks, tol);
    detail::require_converged(tr, tol, "boundary Fresnel tail");
    const cplx t_half = 2.0 * I * std::polar(1.0, w0) * tr.value;
    // (x^2/4) int_{w0}^inf e^{iw} w^{-3/2} dw, by parts.
    const cplx t_three_half = 2.0 * t * std::sqrt(w0) * std::polar(1.0, w0) + (x * x / 4.0) * 2.0 * I * t_half;

    const double omega2 = rate * rate;
    const double extra = std::max(200.0, std::pow(omega2 * std::pow(x, 4) / (32.0 * 1e-11), 0.4));
    const double W = w0 + extra;
    auto breaks = detail::quadratic_phase_breaks(std::sqrt(w0), std::sqrt(W), 1.0, pi);
    {
        // Resolve the oscillation of g0 in s = x^2 / 4w as well.
        const double s_min = x * x / (4.0 * W);
        const auto n = static_cast<std::size_t>(std::ceil((t - s_min) * rate / pi));
        std::vector<double> extra_breaks;
        for (std::size_t j = 1; j < n; ++j) {
            const double s = s_min + (t - s_min) * static_cast<double>(j) / static_cast<double>(n);
            extra_breaks.push_back(x / (2.0 * std::sqrt(s)));
        }
        breaks = merge_breaks(std::move(breaks), extra_breaks);
    }
    auto rem = detail::integrate_panels(
        [&](double v) {
            const double w = v * v;
            const double s = x * x / (4.0 * w);
            const cplx bracket = spec.g0(t - s) - g0_t + s * g0_dot_t;
            return 2.0 * bracket * std::polar(1.0, w);
        },
        breaks, tol);
    detail::require_converged(rem, tol, "boundary Duhamel integral");

    const cplx boundary = (g0_t * t_half - g0_dot_t * t_three_half + rem.value) / std::sqrt(I * pi);
    return initial + boundary;
}

std::map<int, cplx> linear_dtn_coefficients(const std::map<int, cplx>& a, double omega) {
    if (!(omega > 0.0)) throw DomainError("linear_dtn_coefficients: omega must be positive");
    std::map<int, cplx> c;
    for (const auto& [n, an] : a) {
        if (n == 0) {
            if (an != cplx{}) throw DomainError("mean-zero violation: a_0 is nonzero");
            c.emplace(0, cplx{});
        } else if (n > 0) {
            c.emplace(n, -std::sqrt(n * omega) * an);
        } else {
            c.emplace(n, I * std::sqrt(-n * omega) * an);
        }
    }
    return c;
}

IdentityCheck contour_identity_check(double x, double t, const ContourSpec& contour) {
    contour.validate();
    require_time(t, "contour_identity_check");
    if (!(x >= 0.0)) throw DomainError("contour_identity_check: x must be nonnegative");
    auto integrand = [&](cplx k) { return std::exp(-4.0 * I * k * k * t - 2.0 * I * k * x); };
    const double r_scale = 1.0 / (2.0 * std::sqrt(t));
    const cplx lhs = ray_integral(contour, r_scale, x / (2.0 * t), integrand, "contour identity");
    const cplx rhs = -kPhaseMinusQuarter * std::sqrt(pi) / (2.0 * std::sqrt(t)) *
                     std::polar(1.0, x * x / (4.0 * t));
    return {lhs, rhs, std::abs(lhs - rhs)};
}

DecayFit decay_rate_fit(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 8) throw DomainError("decay_rate_fit: at least 8 samples are required");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [t, dev] : samples) {
        if (!(t > 0.0)) throw DomainError("decay_rate_fit: sample times must be positive");
        if (!(dev > 0.0) || !std::isfinite(dev)) {
            throw NumericalError("decay_rate_fit: degenerate fit (zero or non-finite deviation)");
        }
        const double lx = std::log(t);
        const double ly = std::log(dev);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(samples.size());
    const double det = n * sxx - sx * sx;
    if (!(std::abs(det) > 1e-300)) throw NumericalError("decay_rate_fit: degenerate fit (all t equal)");
    DecayFit fit{};
    fit.exponent = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.exponent * sx) / n;
    double ss = 0.0;
    for (const auto& [t, dev] : samples) {
        const double e = std::log(dev) - (fit.intercept + fit.exponent * std::log(t));
        ss += e * e;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

}  // namespace nlsdtn
