#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nlsdtn/error.hpp"

namespace nlsdtn::detail {

namespace {
// Kronrod estimates are pessimistic on smooth panels; only flag gross failures.
constexpr double kSafety = 1e3;
}  // namespace

namespace {

struct Segment {
    double a, b;
    cplx value;
    double error, l1;
    bool operator<(const Segment& o) const { return error < o.error; }
};

// One 31-point Kronrod panel. Boost reports the Gauss/Kronrod difference on
// the reference interval, so the integrand is mapped onto [-1, 1] first and
// the estimate is already in the units of the panel.
Segment kronrod_panel(const ComplexIntegrand& f, double a, double b) {
    using boost::math::quadrature::gauss_kronrod;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    auto mapped = [&](double u) { return f(mid + half * u) * half; };
    double err = 0.0;
    double l1 = 0.0;
    const cplx v = gauss_kronrod<double, 31>::integrate(mapped, -1.0, 1.0, 0, 0.0, &err, &l1);
    return {a, b, v, err, std::abs(l1)};
}

}  // namespace

QuadratureResult integrate(const ComplexIntegrand& f, double a, double b,
                           const QuadratureTolerance& tol) {
    QuadratureResult out;
    if (a == b) return out;

    // Global adaptive bisection of the panel with the largest error estimate.
    std::priority_queue<Segment> heap;
    Segment first = kronrod_panel(f, a, b);
    double error = first.error;
    double l1 = first.l1;
    heap.push(first);
    const std::size_t max_segments = std::size_t{1} << std::min(tol.max_depth, 20u);
    while (error > std::max(tol.abs_tol, tol.rel_tol * l1) && heap.size() < max_segments) {
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            heap.push(worst);
            break;
        }
        Segment left = kronrod_panel(f, worst.a, mid);
        Segment right = kronrod_panel(f, mid, worst.b);
        error += left.error + right.error - worst.error;
        l1 += left.l1 + right.l1 - worst.l1;
        heap.push(left);
        heap.push(right);
    }
    while (!heap.empty()) {
        out.value += heap.top().value;
        out.error += heap.top().error;
        out.l1 += heap.top().l1;
        heap.pop();
    }
    return out;
}

QuadratureResult integrate_panels(const ComplexIntegrand& f, std::span<const double> breaks,
                                  const QuadratureTolerance& tol) {
    QuadratureResult total;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const auto r = integrate(f, breaks[i], breaks[i + 1], tol);
        total.value += r.value;
        total.error += r.error;
        total.l1 += r.l1;
    }
    return total;
}

void require_converged(const QuadratureResult& r, const QuadratureTolerance& tol,
                       const std::string& what) {
    const double target = std::max(tol.abs_tol, tol.rel_tol * std::max(std::abs(r.value), r.l1));
    if (!(r.error <= kSafety * target) || !std::isfinite(r.value.real()) ||
        !std::isfinite(r.value.imag())) {
        std::ostringstream os;
        os.precision(3);
        os << what << ": quadrature did not converge (error estimate " << r.error
           << ", target " << target << ")";
        throw NumericalError(os.str());
    }
}

std::vector<double> quadratic_phase_breaks(double a, double b, double alpha, double step,
                                           std::size_t max_panels) {
    std::vector<double> out{a};
    if (!(b > a)) return out;
    const double pa = alpha * a * a;
    const double pb = alpha * b * b;
    const std::size_t n = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::ceil((pb - pa) / step)), 1, max_panels);
    for (std::size_t j = 1; j < n; ++j) {
        const double p = pa + (pb - pa) * static_cast<double>(j) / static_cast<double>(n);
        out.push_back(std::sqrt(p / alpha));
    }
    out.push_back(b);
    return out;
}

std::vector<double> uniform_breaks(double a, double b, std::size_t panels) {
    panels = std::max<std::size_t>(panels, 1);
    std::vector<double> out(panels + 1);
    for (std::size_t j = 0; j <= panels; ++j) {
        out[j] = a + (b - a) * static_cast<double>(j) / static_cast<double>(panels);
    }
    out.back() = b;
    return out;
}

}  // namespace nlsdtn::detail
