#include "nlsdtn/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>

namespace nlsdtn {

namespace {
constexpr cplx I{0.0, 1.0};
constexpr double kDetFloor = 1e-280;
}  // namespace

void StationarySolitonSpec::validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("soliton: omega must be positive");
    if (!std::isfinite(gamma)) throw DomainError("soliton: gamma must be finite");
}

cplx one_soliton_field(const StationarySolitonSpec& spec, double x, double t) {
    spec.validate();
    const double s = std::sqrt(spec.omega);
    return s * std::polar(1.0, spec.omega * t) / std::cosh(x * s - spec.gamma);
}

void SolitonSpec::validate() const {
    if (eigenvalues.empty()) throw DomainError("N-soliton: at least one eigenvalue is required");
    if (eigenvalues.size() != norming.size()) {
        throw DomainError("N-soliton: eigenvalue and norming lists differ in length");
    }
    for (std::size_t n = 0; n < eigenvalues.size(); ++n) {
        if (!(eigenvalues[n].imag() > 0.0)) {
            throw DomainError("N-soliton: eigenvalue " + std::to_string(n) + " must have Im > 0");
        }
        if (norming[n] == cplx{}) {
            throw DomainError("N-soliton: norming constant " + std::to_string(n) + " is zero");
        }
        for (std::size_t m = 0; m < n; ++m) {
            if (eigenvalues[n] == eigenvalues[m]) throw DomainError("N-soliton: repeated eigenvalue");
        }
    }
}

cplx n_soliton_field(const SolitonSpec& spec, double x, double t) {
    spec.validate();
    const auto N = static_cast<Eigen::Index>(spec.eigenvalues.size());
    Eigen::VectorXcd g(N);
    for (Eigen::Index n = 0; n < N; ++n) {
        const cplx lam = spec.eigenvalues[static_cast<std::size_t>(n)];
        g(n) = spec.norming[static_cast<std::size_t>(n)] * std::exp(I * (lam * x - lam * lam * t));
    }
    Eigen::MatrixXcd M(N, N);
    for (Eigen::Index n = 0; n < N; ++n) {
        for (Eigen::Index k = 0; k < N; ++k) {
            const cplx ln = spec.eigenvalues[static_cast<std::size_t>(n)];
            const cplx lk = spec.eigenvalues[static_cast<std::size_t>(k)];
            M(n, k) = (1.0 + std::conj(g(k)) * g(n)) / (std::conj(ln) - lk);
        }
    }
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(N + 1, N + 1);
    R.topLeftCorner(N, N) = M;
    R.topRightCorner(N, 1) = g;
    R.bottomLeftCorner(1, N).setOnes();

    const cplx det_m = M.partialPivLu().determinant();
    // Relative floor: |det M| against the product of row norms (Hadamard bound).
    double hadamard = 1.0;
    for (Eigen::Index n = 0; n < N; ++n) hadamard *= M.row(n).norm();
    if (!(std::abs(det_m) > 1e-13 * hadamard) || std::abs(det_m) < kDetFloor) {
        throw NumericalError("N-soliton: det M is numerically zero at x = " + std::to_string(x) +
                             ", t = " + std::to_string(t));
    }
    return R.partialPivLu().determinant() / det_m;
}

cplx n_soliton_derivative(const SolitonSpec& spec, double x, double t, double h) {
    if (!(h > 0.0)) throw DomainError("n_soliton_derivative: step must be positive");
    const cplx fm2 = n_soliton_field(spec, x - 2 * h, t);
    const cplx fm1 = n_soliton_field(spec, x - h, t);
    const cplx fp1 = n_soliton_field(spec, x + h, t);
    const cplx fp2 = n_soliton_field(spec, x + 2 * h, t);
    return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
}

SolitonSpec two_soliton_spec(double epsilon) {
    SolitonSpec s;
    s.eigenvalues = {cplx(0.0, 1.0), cplx(0.0, 2.0)};
    s.norming = {cplx(0.0, -epsilon), cplx(0.0, -epsilon)};
    return s;
}

SolitonExpansion two_soliton_expansion(std::span<const double> epsilons, const ExpansionOptions& opt) {
    const std::size_t P = opt.fitted_powers.size();
    if (epsilons.size() < P) {
        throw DomainError("two_soliton_expansion: need at least " + std::to_string(P) +
                          " epsilon values");
    }
    {
        std::set<double> distinct(epsilons.begin(), epsilons.end());
        if (distinct.size() != epsilons.size() || *distinct.begin() <= 0.0) {
            throw DomainError("two_soliton_expansion: epsilon values must be positive and distinct");
        }
    }
    if (opt.samples_per_period < 2 * (opt.harmonic_max - opt.harmonic_min) + 1) {
        throw DomainError("two_soliton_expansion: too few samples per period for the harmonic window");
    }

    const int M = opt.samples_per_period;
    const double period = 2.0 * std::numbers::pi;  // eigenvalues {i, 2i}
    const auto E = static_cast<Eigen::Index>(epsilons.size());
    const int H = opt.harmonic_max - opt.harmonic_min + 1;

    // Harmonic samples: rows = epsilon, columns = harmonic.
    Eigen::MatrixXcd dir(E, H), neu(E, H);
    for (Eigen::Index e = 0; e < E; ++e) {
        const SolitonSpec spec = two_soliton_spec(epsilons[static_cast<std::size_t>(e)]);
        std::vector<cplx> u(M), ux(M);
        for (int j = 0; j < M; ++j) {
            const double t = period * j / M;
            u[j] = n_soliton_field(spec, 0.0, t);
            ux[j] = n_soliton_derivative(spec, 0.0, t, opt.fd_step);
        }
        for (int h = 0; h < H; ++h) {
            const int n = opt.harmonic_min + h;
            cplx su{}, sx{};
            for (int j = 0; j < M; ++j) {
                const cplx phase = std::polar(1.0, -n * period * j / M);
                su += u[j] * phase;
                sx += ux[j] * phase;
            }
            dir(e, h) = su / static_cast<double>(M);
            neu(e, h) = sx / static_cast<double>(M);
        }
    }

    Eigen::MatrixXd V(E, static_cast<Eigen::Index>(P));
    for (Eigen::Index e = 0; e < E; ++e) {
        for (std::size_t p = 0; p < P; ++p) {
            V(e, static_cast<Eigen::Index>(p)) =
                std::pow(epsilons[static_cast<std::size_t>(e)], opt.fitted_powers[p]);
        }
    }
    // Column scaling keeps the Vandermonde-type system well conditioned.
    Eigen::VectorXd scale = V.colwise().norm().cwiseInverse();
    const Eigen::MatrixXd Vs = V * scale.asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Vs);
    const auto sv = svd.singularValues();
    SolitonExpansion out;
    out.condition_number = sv(0) / sv(sv.size() - 1);
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Vs);
    const Eigen::MatrixXcd Vc = Vs.cast<cplx>();

    auto fit = [&](const Eigen::MatrixXcd& data, GradedCoefficients& table) {
        std::map<std::pair<int, int>, cplx> fitted;
        double largest = 0.0;
        // Residuals are measured against the dominant harmonic: columns that
        // hold only roundoff would otherwise report O(1) relative misfit.
        double data_scale = 0.0;
        for (int h = 0; h < H; ++h) data_scale = std::max(data_scale, data.col(h).norm());
        if (!(data_scale > 0.0)) throw NumericalError("two_soliton_expansion: sampled field is zero");
        for (int h = 0; h < H; ++h) {
            const Eigen::VectorXcd y = data.col(h);
            Eigen::VectorXcd x(static_cast<Eigen::Index>(P));
            x.real() = qr.solve(Eigen::VectorXd(y.real()));
            x.imag() = qr.solve(Eigen::VectorXd(y.imag()));
            out.max_fit_residual = std::max(out.max_fit_residual, (Vc * x - y).norm() / data_scale);
            for (std::size_t p = 0; p < P; ++p) {
                const cplx coef = x(static_cast<Eigen::Index>(p)) * scale(static_cast<Eigen::Index>(p));
                const int order = opt.fitted_powers[p];
                if (order > opt.max_reported_order) continue;
                fitted[{order, opt.harmonic_min + h}] = coef;
                largest = std::max(largest, std::abs(coef));
            }
        }
        table = GradedCoefficients(1.0);
        for (const auto& [key, v] : fitted) {
            if (std::abs(v) > opt.drop_fraction * largest) table.set(key.first, key.second, v);
        }
    };
    fit(dir, out.dirichlet);
    fit(neu, out.neumann);

    if (out.max_fit_residual > opt.max_residual) {
        throw NumericalError("two_soliton_expansion: fit residual " +
                             std::to_string(out.max_fit_residual) + " exceeds tolerance");
    }
    return out;
}

cplx closed_form_branch(double alpha, double omega, Branch branch, int lambda, int sign) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha) || !std::isfinite(omega)) {
        throw DomainError("closed_form_branch: alpha must be a nonnegative finite number");
    }
    if (alpha == 0.0) return {};
    const double a2 = alpha * alpha;
    switch (branch) {
        case Branch::FocusingA:
            if (sign != 1 && sign != -1) throw DomainError("closed_form_branch: sign must be +1 or -1");
            if (omega < a2) throw DomainError("closed_form_branch: focusing-a requires omega >= alpha^2");
            return sign * alpha * std::sqrt(omega - a2);
        case Branch::FocusingB:
            if (omega > -6.0 * a2) {
                throw DomainError("closed_form_branch: focusing-b requires omega <= -6 alpha^2");
            }
            return I * alpha * std::sqrt(std::abs(omega) + 2.0 * a2);
        case Branch::PerturbativeSum:
            if (lambda != 1 && lambda != -1) throw DomainError("closed_form_branch: lambda must be +1 or -1");
            if (omega + lambda * a2 < 0.0) {
                throw DomainError("closed_form_branch: omega + lambda alpha^2 must be nonnegative");
            }
            return -alpha * std::sqrt(omega + lambda * a2);
    }
    return {};
}

}  // namespace nlsdtn
