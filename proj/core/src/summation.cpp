#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nlsdtn/harness.hpp"

namespace nlsdtn {

namespace {

// |Q(eps)| below this fraction of sum |q_j eps^j| counts as a vanishing denominator.
constexpr double kDenominatorFloor = 1e-10;

std::vector<cplx> harmonic_column(const GradedCoefficients& c, int harmonic) {
    std::vector<cplx> s(static_cast<std::size_t>(c.max_order()) + 1);
    for (const auto& [key, v] : c) {
        if (key.harmonic == harmonic) s[static_cast<std::size_t>(key.order)] = v;
    }
    return s;
}

cplx horner(const std::vector<cplx>& p, double x) {
    cplx acc{};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

int pade_order(int order_max) { return std::min(4, order_max / 2); }

cplx sum_series(const GradedCoefficients& c, int harmonic, double epsilon, SummationMethod method) {
    if (!std::isfinite(epsilon)) throw DomainError("sum_series: epsilon must be finite");
    const std::vector<cplx> s = harmonic_column(c, harmonic);
    if (method == SummationMethod::Partial) return horner(s, epsilon);

    const int m = pade_order(static_cast<int>(s.size()) - 1);
    if (m < 1) {
        throw NumericalError("sum_series: Pade needs coefficients through order 2, have " +
                             std::to_string(s.size() - 1));
    }
    auto coef = [&](int k) { return k >= 0 && k < static_cast<int>(s.size()) ? s[k] : cplx{}; };

    // sum_{j=1..m} q_j s_{k-j} = -s_k for k = m+1..2m
    Eigen::MatrixXcd A(m, m);
    Eigen::VectorXcd rhs(m);
    for (int r = 0; r < m; ++r) {
        const int k = m + 1 + r;
        for (int j = 1; j <= m; ++j) A(r, j - 1) = coef(k - j);
        rhs(r) = -coef(k);
    }
    const Eigen::FullPivLU<Eigen::MatrixXcd> lu(A);
    if (!lu.isInvertible()) {
        throw NumericalError("sum_series: Pade system is singular at [" + std::to_string(m) + "/" +
                             std::to_string(m) + "]");
    }
    const Eigen::VectorXcd qv = lu.solve(rhs);
    std::vector<cplx> q(static_cast<std::size_t>(m) + 1), p(static_cast<std::size_t>(m) + 1);
    q[0] = 1.0;
    for (int j = 1; j <= m; ++j) q[j] = qv(j - 1);
    for (int k = 0; k <= m; ++k) {
        for (int j = 0; j <= k; ++j) p[k] += q[j] * coef(k - j);
    }

    const cplx den = horner(q, epsilon);
    double scale = 0.0;
    for (int j = 0; j <= m; ++j) scale += std::abs(q[j]) * std::pow(std::abs(epsilon), j);
    if (std::abs(den) <= kDenominatorFloor * scale) {
        throw NumericalError("sum_series: Pade denominator vanishes near eps = " + std::to_string(epsilon));
    }
    return horner(p, epsilon) / den;
}

}  // namespace nlsdtn
