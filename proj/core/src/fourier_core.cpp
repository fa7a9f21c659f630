#include "nlsdtn/fourier_core.hpp"

#include <cmath>
#include <cstdlib>

namespace nlsdtn {

GradedCoefficients conjugate_grade(const GradedCoefficients& a) {
    GradedCoefficients out(a.omega());
    for (const auto& [key, value] : a) out.set(key.order, key.harmonic, std::conj(value));
    return out;
}

cplx graded_bilinear_convolution(const GradedCoefficients& x, const GradedCoefficients& y,
                                 int target_order, int target_harmonic) {
    cplx acc{0.0, 0.0};
    for (const auto& [kx, vx] : x) {
        const int rest = target_order - kx.order;
        if (rest < 1) continue;
        if (const cplx* vy = y.find(rest, target_harmonic - kx.harmonic)) acc += vx * *vy;
    }
    return acc;
}

cplx graded_triple_convolution(const GradedCoefficients& xbar, const GradedCoefficients& y,
                               const GradedCoefficients& z, int target_order,
                               int target_harmonic) {
    cplx acc{0.0, 0.0};
    for (const auto& [kx, vx] : xbar) {
        for (const auto& [ky, vy] : y) {
            const int rest = target_order - kx.order - ky.order;
            if (rest < 1) continue;
            if (const cplx* vz = z.find(rest, target_harmonic + kx.harmonic - ky.harmonic)) {
                acc += vx * vy * *vz;
            }
        }
    }
    return acc;
}

cplx graded_convolution(IndexRule rule, const GradedCoefficients& x, const GradedCoefficients& y,
                        const GradedCoefficients* z, int target_order, int target_harmonic) {
    switch (rule) {
        case IndexRule::Cauchy:
            return graded_bilinear_convolution(x, y, target_order, target_harmonic);
        case IndexRule::ConjugateTriple:
            if (z == nullptr) throw DomainError("triple convolution needs a third series");
            return graded_triple_convolution(x, y, *z, target_order, target_harmonic);
    }
    return {};
}

cplx evaluate_series(const GradedCoefficients& a, double epsilon, double t) {
    if (epsilon < 0.0) throw DomainError("evaluate_series: epsilon must be >= 0");
    cplx acc{0.0, 0.0};
    for (const auto& [key, value] : a) {
        const double phase = key.harmonic * a.omega() * t;
        acc += value * std::pow(epsilon, key.order) * cplx(std::cos(phase), std::sin(phase));
    }
    return acc;
}

int harmonic_radius(const GradedCoefficients& a, int order) {
    int r = 0;
    for (const auto& [n, v] : a.row(order)) r = std::max(r, std::abs(n));
    return r;
}

}  // namespace nlsdtn
