#include "nlsdtn/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace nlsdtn {

namespace {

constexpr cplx I{0.0, 1.0};

std::string at(int order, int harmonic) {
    return "(" + std::to_string(order) + "," + std::to_string(harmonic) + ")";
}

cplx lookup(const GradedCoefficients& g, int order, int harmonic) {
    const cplx* v = g.find(order, harmonic);
    return v ? *v : cplx{};
}

// Adds the map `src` into `dst` with weight `w`.
void accumulate(std::map<int, RationalK>& dst, std::map<int, RationalK>&& src, cplx w) {
    for (auto& [n, r] : src) {
        r *= w;
        auto it = dst.find(n);
        if (it == dst.end()) {
            dst.emplace(n, std::move(r));
        } else {
            it->second += r;
        }
    }
}

}  // namespace

void ProblemSpec::validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("problem: omega must be a positive finite number");
    }
    if (lambda != 1 && lambda != -1) throw DomainError("problem: lambda must be +1 or -1");
    if (order_max < 1) throw DomainError("problem: order_max must be >= 1");
    for (const auto& [key, value] : dirichlet) {
        if (key.harmonic == 0 && value != cplx{}) {
            throw DomainError("mean-zero violation: a" + at(key.order, 0) + " is nonzero");
        }
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            throw DomainError("problem: a" + at(key.order, key.harmonic) + " is not finite");
        }
    }
}

cplx k1(int n, double omega) {
    const double s = std::sqrt(std::abs(static_cast<double>(n) * omega)) / 2.0;
    return n >= 0 ? cplx{0.0, s} : cplx{s, 0.0};
}

OrderRow first_order(const ProblemSpec& spec, const HierarchyOptions& opt) {
    spec.validate();
    OrderRow row;
    for (const auto& [n, a] : spec.dirichlet.row(1)) {
        if (*a == cplx{}) continue;
        const cplx root = k1(n, spec.omega);
        row.c.emplace(n, 2.0 * I * root * *a);
        row.d.emplace(n, RationalK::simple_pole(*a / (2.0 * I), -root, opt.rational.degree_cap));
    }
    return row;
}

std::map<int, RationalK> assemble_F_row(int order, const HierarchySolution& state) {
    const GradedCoefficients abar = conjugate_grade(state.spec.dirichlet);
    const GradedCoefficients cbar = conjugate_grade(state.neumann);
    const auto& a = state.spec.dirichlet;
    const auto& d = state.d_table;

    auto scalar_rk_rk = [](const cplx& x, const RationalK& y, const RationalK& z) {
        return (y * z) * x;
    };
    auto scalar_scalar_rk = [](const cplx& x, const cplx& y, const RationalK& z) {
        return z * (x * y);
    };

    // T1 = sum abar_l d_m d_{n+l-m}, T2 = sum cbar_l d_m d_{n+l-m}, T3 = sum abar_l a_m d_{n+l-m}
    auto t1 = triple_product_row<RationalK>(abar, d, d, order, scalar_rk_rk);
    auto t2 = triple_product_row<RationalK>(cbar, d, d, order, scalar_rk_rk);
    auto t3 = triple_product_row<RationalK>(abar, a, d, order, scalar_scalar_rk);

    const PolynomialK minus_2ik(std::vector<cplx>{0.0, -2.0 * I});
    for (auto& [n, r] : t1) r.multiply_by(minus_2ik);

    std::map<int, RationalK> f;
    const double lambda = state.spec.lambda;
    accumulate(f, std::move(t1), lambda);
    accumulate(f, std::move(t2), -lambda);
    accumulate(f, std::move(t3), 2.0 * lambda);
    return f;
}

RationalK assemble_F(int order, int harmonic, const HierarchySolution& state) {
    auto row = assemble_F_row(order, state);
    auto it = row.find(harmonic);
    return it == row.end() ? RationalK{} : it->second;
}

HierarchySolution step_order(int order, HierarchySolution state, const HierarchyOptions& opt) {
    if (order < 1) throw DomainError("step_order: order must be >= 1");
    if (state.completed_order != order - 1) {
        throw DomainError("step_order: rows 1.." + std::to_string(order - 1) +
                          " must be complete before row " + std::to_string(order));
    }
    const ProblemSpec& spec = state.spec;

    if (order == 1) {
        OrderRow row = first_order(spec, opt);
        for (auto& [n, c] : row.c) state.neumann.set(1, n, c);
        for (auto& [n, d] : row.d) state.d_table.set(1, n, std::move(d));
        state.completed_order = 1;
        return state;
    }

    std::map<int, RationalK> f_row;
    try {
        f_row = assemble_F_row(order, state);
    } catch (const DegreeCapError& e) {
        throw HierarchyError(order, 0,
                             "degree cap exceeded while assembling row " + std::to_string(order) +
                                 ": " + e.what());
    }

    std::set<int> harmonics;
    for (const auto& [n, f] : f_row) harmonics.insert(n);
    for (const auto& [n, a] : spec.dirichlet.row(order)) harmonics.insert(n);

    double row_scale = 0.0;
    for (const auto& [n, f] : f_row) row_scale = std::max(row_scale, f.num().max_abs_coeff());

    for (int n : harmonics) {
        const cplx a = lookup(spec.dirichlet, order, n);
        auto fit = f_row.find(n);
        const RationalK f = fit == f_row.end() ? RationalK{} : fit->second;

        if (n == 0) {
            const double mag = f.num().max_abs_coeff();
            if (mag > opt.mean_zero_tol * std::max(1.0, row_scale) || a != cplx{}) {
                throw HierarchyError(order, 0,
                                     "mean-zero violation at " + at(order, 0) +
                                         ": the zeroth harmonic is forced by lower orders");
            }
            continue;
        }
        if (f.is_zero() && a == cplx{}) continue;

        const cplx root = k1(n, spec.omega);
        try {
            const cplx c = f.evaluate_deflated(root, opt.rational) + 2.0 * I * root * a;

            RationalK numer = f * (-I);
            numer += RationalK(PolynomialK(std::vector<cplx>{I * c, 2.0 * a}),
                               opt.rational.degree_cap);
            numer *= 1.0 / (4.0 * I);
            numer.divide_by_linear(root);
            numer.divide_by_linear(-root);

            RationalK d = numer.deflate(root, opt.rational);
            state.neumann.set(order, n, c);
            if (!d.is_zero()) state.d_table.set(order, n, std::move(d));
        } catch (const SingularityError& e) {
            throw HierarchyError(order, n, "hierarchy inconsistency at " + at(order, n) + ": " +
                                               e.what());
        } catch (const DegreeCapError& e) {
            throw HierarchyError(order, n,
                                 "degree cap exceeded at " + at(order, n) + ": " + e.what());
        }
    }
    state.completed_order = order;
    return state;
}

HierarchySolution solve(const ProblemSpec& spec, const HierarchyOptions& opt) {
    spec.validate();
    HierarchySolution state;
    state.spec = spec;
    state.neumann = GradedCoefficients(spec.omega);
    state.d_table = RationalTable(spec.omega);
    for (int m = 1; m <= spec.order_max; ++m) state = step_order(m, std::move(state), opt);
    return state;
}

double riccati_residual(const HierarchySolution& solution, std::span<const cplx> k_samples,
                        int order) {
    if (order < 1 || order > solution.completed_order) {
        throw DomainError("riccati_residual: order " + std::to_string(order) +
                          " not computed (completed through " +
                          std::to_string(solution.completed_order) + ")");
    }
    const auto& spec = solution.spec;
    const auto& a = spec.dirichlet;
    const auto& c = solution.neumann;
    const GradedCoefficients abar = conjugate_grade(a);
    const GradedCoefficients cbar = conjugate_grade(c);
    const double lambda = spec.lambda;
    const double omega = spec.omega;

    double worst = 0.0;
    for (const cplx& k : k_samples) {
        GradedCoefficients dk(omega);
        for (const auto& [key, r] : solution.d_table) {
            if (key.order <= order) dk.set(key.order, key.harmonic, r.evaluate(k));
        }
        auto mul3 = [](const cplx& x, const cplx& y, const cplx& z) { return x * y * z; };
        auto t1 = triple_product_row<cplx>(abar, dk, dk, order, mul3);
        auto t2 = triple_product_row<cplx>(cbar, dk, dk, order, mul3);
        auto t3 = triple_product_row<cplx>(abar, a, dk, order, mul3);

        std::set<int> harmonics;
        for (const auto* m : {&t1, &t2, &t3}) {
            for (const auto& [n, v] : *m) harmonics.insert(n);
        }
        for (const auto& [n, v] : dk.row(order)) harmonics.insert(n);
        for (const auto& [n, v] : c.row(order)) harmonics.insert(n);
        for (const auto& [n, v] : a.row(order)) harmonics.insert(n);

        auto get = [](const std::map<int, cplx>& m, int n) {
            auto it = m.find(n);
            return it == m.end() ? cplx{} : it->second;
        };
        for (int n : harmonics) {
            const cplx d = lookup(dk, order, n);
            const cplx e = (I * static_cast<double>(n) * omega + 4.0 * I * k * k) * d -
                           2.0 * k * lookup(a, order, n) - I * lookup(c, order, n) +
                           lambda * (2.0 * k * get(t1, n) - I * get(t2, n) + 2.0 * I * get(t3, n));
            worst = std::max(worst, std::abs(e));
        }
    }
    return worst;
}

double riccati_residual_all(const HierarchySolution& solution, std::span<const cplx> k_samples) {
    double worst = 0.0;
    for (int m = 1; m <= solution.completed_order; ++m) {
        worst = std::max(worst, riccati_residual(solution, k_samples, m));
    }
    return worst;
}

}  // namespace nlsdtn
