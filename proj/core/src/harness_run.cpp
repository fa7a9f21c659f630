#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "nlsdtn/harness.hpp"
#include "nlsdtn/linear_halfline.hpp"
#include "nlsdtn/oracles.hpp"

namespace nlsdtn {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr std::uint64_t kSampleSeed = 0x6e6c7364746eULL;
constexpr int kSamplesPerOrder = 5;
constexpr double kPoleMargin = 0.5;

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string key_name(const char* prefix, int order, int harmonic) {
    return std::string(prefix) + "[" + std::to_string(order) + "," + std::to_string(harmonic) + "]";
}

cplx lookup(const GradedCoefficients& g, int order, int harmonic) {
    const cplx* v = g.find(order, harmonic);
    return v ? *v : cplx{};
}

/// Deterministic k samples on the annulus 0.3 <= |k| / sqrt(omega) <= 2, at
/// least 0.5 sqrt(omega) away from every pole -k1(n) of the d table. Closer
/// to a pole of multiplicity p the residual carries roundoff amplified like
/// dist^{-p}, which says nothing about the coefficients.
std::vector<cplx> residual_samples(const HierarchySolution& sol, std::mt19937_64& rng) {
    const double omega = sol.spec.omega;
    const double scale = std::sqrt(omega);
    int radius_n = 0;
    for (const auto& [key, d] : sol.d_table) radius_n = std::max(radius_n, std::abs(key.harmonic));
    std::uniform_real_distribution<double> radius(0.3 * scale, 2.0 * scale);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<cplx> out;
    while (static_cast<int>(out.size()) < kSamplesPerOrder) {
        const cplx k = std::polar(radius(rng), angle(rng));
        bool clear = true;
        for (int n = -radius_n; n <= radius_n && clear; ++n) {
            if (n != 0) clear = std::abs(k + k1(n, omega)) >= kPoleMargin * scale;
        }
        if (clear) out.push_back(k);
    }
    return out;
}

/// Max Riccati residual over all orders; each order gets fresh samples
/// unless the grid supplies k points.
double riccati_check(const HierarchySolution& sol, const EvalGrid& grid,
                     std::map<std::string, double>* per_order, const std::string& prefix) {
    std::mt19937_64 rng(kSampleSeed);
    double worst = 0.0;
    for (int m = 1; m <= sol.completed_order; ++m) {
        const std::vector<cplx> ks = grid.k.empty() ? residual_samples(sol, rng) : grid.k;
        const double r = riccati_residual(sol, ks, m);
        if (per_order) (*per_order)[prefix + "riccati_order_" + std::to_string(m)] = r;
        worst = std::max(worst, r);
    }
    return worst;
}

struct Context {
    const RunConfig& config;
    ReportBundle& bundle;
    const Tolerances& tol;
    double riccati_worst = 0.0;

    HierarchySolution solve_tracked(const ProblemSpec& spec) {
        HierarchySolution sol = solve(spec, tol.hierarchy_options());
        riccati_worst = std::max(riccati_worst, riccati_check(sol, config.eval_grid, nullptr, ""));
        return sol;
    }

    void add(Comparison c) { bundle.comparisons.push_back(std::move(c)); }

    void finish_riccati() {
        bundle.residuals["riccati_max"] = riccati_worst;
        add(compare("riccati residual (all solved examples)", riccati_worst, 0.0, tol.residual,
                    Provenance::CrossFormula, Criterion::Absolute));
    }
};

ProblemSpec make_spec(double omega, int lambda, int order,
                      std::initializer_list<std::tuple<int, int, cplx>> entries) {
    ProblemSpec s;
    s.omega = omega;
    s.lambda = lambda;
    s.order_max = order;
    s.dirichlet = GradedCoefficients(omega);
    for (const auto& [N, n, v] : entries) s.dirichlet.set(N, n, v);
    return s;
}

std::string case_tag(double omega, int lambda) {
    return "w=" + fmt(omega) + " l=" + (lambda > 0 ? "+1" : "-1");
}

// ------------------------------------------------------------------ solve

void run_solve(Context& ctx) {
    const ProblemSpec spec = ctx.config.problem->to_spec();
    const HierarchySolution sol = solve(spec, ctx.tol.hierarchy_options());
    if (ctx.config.wants("c_table")) ctx.bundle.c_table = sol.neumann;

    ctx.riccati_worst = riccati_check(sol, ctx.config.eval_grid, &ctx.bundle.residuals, "");
    ctx.finish_riccati();

    for (const auto& e : ctx.config.expected) {
        ctx.add(compare(key_name("c", e.order, e.harmonic), lookup(sol.neumann, e.order, e.harmonic),
                        e.value, ctx.tol.comparison_rel, e.provenance));
    }

    if (ctx.config.wants("d_grid")) {
        DataTable t{{"N", "n", "k_re", "k_im", "re", "im"}, {}};
        for (const auto& [key, d] : sol.d_table) {
            for (const cplx k : ctx.config.eval_grid.k) {
                cplx v{std::nan(""), std::nan("")};
                try {
                    v = d.evaluate(k, ctx.tol.hierarchy_options().rational);
                } catch (const SingularityError&) {
                    ctx.bundle.notes.push_back(key_name("d", key.order, key.harmonic) +
                                               " has a pole at k = " + fmt(k.real()) + " + " +
                                               fmt(k.imag()) + "i");
                }
                t.rows.push_back({static_cast<double>(key.order), static_cast<double>(key.harmonic),
                                  k.real(), k.imag(), v.real(), v.imag()});
            }
        }
        ctx.bundle.tables["d_grid"] = std::move(t);
    }
}

// ----------------------------------------------------------------- verify

const double kExampleOmegas[] = {0.5, 1.0, 2.0};
const int kLambdas[] = {1, -1};

void verify_exponential(Context& ctx, bool negative) {
    const int h = negative ? -1 : 1;
    for (double w : kExampleOmegas) {
        for (int lam : kLambdas) {
            const auto sol = ctx.solve_tracked(make_spec(w, lam, 7, {{1, h, 1.0}}));
            const double sw = std::sqrt(w);
            std::map<int, cplx> ref;
            if (!negative) {
                ref = {{1, -sw}, {3, -lam / (2 * sw)}, {5, 1 / (8 * w * sw)}, {7, -lam / (16 * w * w * sw)}};
            } else {
                ref = {{1, I * sw}, {3, -I * double(lam) / sw}, {5, -I / (2 * w * sw)},
                       {7, -I * double(lam) / (2 * w * w * sw)}};
            }
            const std::string tag = std::string(negative ? "negative" : "single") + "-exponential " +
                                    case_tag(w, lam) + " ";
            for (const auto& [N, v] : ref) {
                ctx.add(compare(tag + key_name("c", N, h), lookup(sol.neumann, N, h), v,
                                ctx.tol.comparison_rel, Provenance::PaperTable));
            }
            double spurious = 0.0;
            for (const auto& [key, v] : sol.neumann) {
                if (key.harmonic != h) spurious = std::max(spurious, std::abs(v));
            }
            ctx.add(compare(tag + "other entries", spurious, 0.0, ctx.tol.spurious_entry,
                            Provenance::PaperTable, Criterion::Absolute));
        }
    }
}

void verify_two_exponential(Context& ctx) {
    for (const auto& p : ctx.config.verify->pairs) {
        for (double w : {1.0, 2.5}) {
            for (int lam : kLambdas) {
                const auto sol = ctx.solve_tracked(make_spec(w, lam, 7, {{1, 1, p.alpha}, {1, -1, p.beta}}));
                const GradedCoefficients table = paper_c_table(p.alpha, p.beta, w, lam);
                std::ostringstream tag;
                tag << "two-exponential a=" << p.alpha << " b=" << p.beta << " " << case_tag(w, lam) << " ";
                std::set<GradedKey> keys;
                for (const auto& [key, v] : table) keys.insert(key);
                for (const auto& [key, v] : sol.neumann) keys.insert(key);
                for (const auto& key : keys) {
                    ctx.add(compare(tag.str() + key_name("c", key.order, key.harmonic),
                                    lookup(sol.neumann, key.order, key.harmonic),
                                    lookup(table, key.order, key.harmonic), ctx.tol.comparison_rel,
                                    Provenance::PaperTable));
                }
            }
        }
    }
}

void verify_sine_wave(Context& ctx) {
    const cplx alpha = 1.0 / (2.0 * I);
    const cplx beta = -alpha;
    const double s3 = std::sqrt(3.0);
    const cplx K = (1.0 - s3) * (s3 + I) / 16.0;
    for (int lam : kLambdas) {
        const auto sol = ctx.solve_tracked(make_spec(1.0, lam, 3, {{1, 1, alpha}, {1, -1, beta}}));
        const cplx c31 = lookup(sol.neumann, 3, 1), c3m1 = lookup(sol.neumann, 3, -1);
        const cplx c33 = lookup(sol.neumann, 3, 3), c3m3 = lookup(sol.neumann, 3, -3);
        const double l = lam;
        const std::string tag = "sine-wave l=" + std::string(lam > 0 ? "+1" : "-1") + " ";
        // c e^{int} + c' e^{-int} = (c + c') cos nt + i (c - c') sin nt
        ctx.add(compare(tag + "A (cos t)", l * (c31 + c3m1), cplx(0.25, 3.0 / 16.0),
                        ctx.tol.comparison_rel, Provenance::PaperTable));
        ctx.add(compare(tag + "B (sin t)", l * I * (c31 - c3m1), cplx(-7.0 / 16.0, -0.25),
                        ctx.tol.comparison_rel, Provenance::PaperTable));
        ctx.add(compare(tag + "cos 3t", l * (c33 + c3m3), K, ctx.tol.comparison_rel, Provenance::PaperTable));
        ctx.add(compare(tag + "sin 3t", l * I * (c33 - c3m3), -K, ctx.tol.comparison_rel,
                        Provenance::PaperTable));
    }
}

void verify_two_soliton(Context& ctx) {
    const std::map<std::pair<int, int>, double> a_ref = {{{1, 1}, -6},   {{1, 4}, 12},   {{3, -2}, -48},
                                                         {{3, 1}, 198},  {{3, 4}, -252}, {{3, 7}, 96}};
    const std::map<std::pair<int, int>, double> c_ref = {{{1, 1}, 6},    {{1, 4}, -24},  {{3, -2}, 192},
                                                         {{3, 1}, -882}, {{3, 4}, 1224}, {{3, 7}, -480}};
    ProblemSpec spec = make_spec(1.0, -1, 3, {});
    for (const auto& [key, v] : a_ref) spec.dirichlet.set(key.first, key.second, v);
    const auto sol = ctx.solve_tracked(spec);
    for (const auto& [key, v] : c_ref) {
        ctx.add(compare("two-soliton hierarchy " + key_name("c", key.first, key.second),
                        lookup(sol.neumann, key.first, key.second), v, ctx.tol.comparison_rel,
                        Provenance::PaperTable));
    }

    const SolitonExpansion ex = two_soliton_expansion(ctx.config.verify->epsilons);
    ctx.bundle.residuals["two_soliton_fit_residual"] = ex.max_fit_residual;
    ctx.bundle.notes.push_back("two-soliton epsilon fit condition number " + fmt(ex.condition_number));
    auto check_table = [&](const char* name, const GradedCoefficients& got,
                           const std::map<std::pair<int, int>, double>& ref) {
        for (const auto& [key, v] : ref) {
            ctx.add(compare(std::string("two-soliton extraction ") + key_name(name, key.first, key.second),
                            lookup(got, key.first, key.second), v, ctx.tol.extraction_rel,
                            Provenance::BruteForce));
        }
        // Anything else the fit reports must be negligible against the table.
        double extra = 0.0;
        for (const auto& [key, v] : got) {
            if (!ref.count({key.order, key.harmonic})) extra = std::max(extra, std::abs(v));
        }
        ctx.add(compare(std::string("two-soliton extraction ") + name + " off-table", extra, 0.0,
                        ctx.tol.extraction_rel * 1000.0, Provenance::BruteForce, Criterion::Absolute));
    };
    check_table("a", ex.dirichlet, a_ref);
    check_table("c", ex.neumann, c_ref);
}

void verify_stationary_soliton(Context& ctx) {
    const double w = ctx.config.problem ? ctx.config.problem->omega : 1.0;
    const double h = 1e-3;
    for (double gamma : {ctx.config.verify->soliton_gamma, -ctx.config.verify->soliton_gamma}) {
        const StationarySolitonSpec s{w, gamma};
        auto u = [&](double x) { return one_soliton_field(s, x, 0.0); };
        const cplx ux = (u(-2 * h) - 8.0 * u(-h) + 8.0 * u(h) - u(2 * h)) / (12.0 * h);
        const double alpha = std::sqrt(w) / std::cosh(gamma);
        const cplx c = closed_form_branch(alpha, w, Branch::FocusingA, -1, gamma > 0 ? 1 : -1);
        const std::string tag = "stationary soliton w=" + fmt(w) + " gamma=" + fmt(gamma) + " ";
        ctx.add(compare(tag + "u(0,0)", u(0.0), alpha, ctx.tol.finite_difference, Provenance::ClosedForm,
                        Criterion::Absolute));
        ctx.add(compare(tag + "u_x(0,0)", ux, c, ctx.tol.finite_difference, Provenance::ClosedForm,
                        Criterion::Absolute));
    }
}

void verify_fault_injection(Context& ctx) {
    const double fault = 1e-3;
    for (const auto& spec : {make_spec(1.0, 1, 7, {{1, 1, 1.0}}),
                             make_spec(1.0, -1, 5, {{1, 1, cplx(0.7, 0.2)}, {1, -1, cplx(-0.3, 0.5)}})}) {
        const HierarchySolution clean = ctx.solve_tracked(spec);
        double weakest = std::numeric_limits<double>::infinity();
        std::mt19937_64 rng(kSampleSeed);
        for (const auto& [key, v] : clean.neumann) {
            HierarchySolution faulty = clean;
            faulty.neumann.set(key.order, key.harmonic, v + fault);
            const std::vector<cplx> ks = residual_samples(clean, rng);
            weakest = std::min(weakest, riccati_residual(faulty, ks, key.order));
        }
        ctx.add(compare("fault injection (1e-3 in each c) " + case_tag(spec.omega, spec.lambda) +
                            " weakest residual",
                        weakest, 0.0, ctx.tol.fault_detection, Provenance::CrossFormula,
                        Criterion::AtLeast));
    }
}

void run_verify(Context& ctx) {
    for (VerifyCase c : ctx.config.verify->cases) {
        switch (c) {
            case VerifyCase::SingleExponential: verify_exponential(ctx, false); break;
            case VerifyCase::NegativeExponential: verify_exponential(ctx, true); break;
            case VerifyCase::TwoExponential: verify_two_exponential(ctx); break;
            case VerifyCase::SineWave: verify_sine_wave(ctx); break;
            case VerifyCase::TwoSoliton: verify_two_soliton(ctx); break;
            case VerifyCase::StationarySoliton: verify_stationary_soliton(ctx); break;
            case VerifyCase::FaultInjection: verify_fault_injection(ctx); break;
        }
    }
    ctx.finish_riccati();
}

// ----------------------------------------------------------------- linear

void run_linear(Context& ctx) {
    const LinearConfig& lc = *ctx.config.linear;
    const double wb = lc.boundary_omega;
    LinearProblemSpec spec;
    spec.g0 = [wb](double t) { return std::polar(1.0, wb * t); };
    spec.g0_dot = [wb](double t) { return I * wb * std::polar(1.0, wb * t); };
    spec.omega = wb;
    spec.rel_tol = ctx.tol.quadrature_rel;
    if (lc.initial == InitialDatum::Exponential) {
        spec.u0 = [](double x) { return cplx(std::exp(-x)); };
        spec.u0_prime = [](double x) { return cplx(-std::exp(-x)); };
    }
    ContourSpec contour;
    contour.rel_tol = ctx.tol.quadrature_rel;
    // e^{-x + it} is an exact solution; it pins down both formulas absolutely.
    const bool exact = lc.initial == InitialDatum::Exponential && wb == 1.0;

    if (ctx.config.problem) {
        std::map<int, cplx> a;
        for (const auto& e : ctx.config.problem->dirichlet) {
            if (e.order == 1) a[e.harmonic] = e.value;
        }
        const double w = ctx.config.problem->omega;
        const auto lin = linear_dtn_coefficients(a, w);
        for (const auto& [n, v] : lin) {
            ctx.add(compare("linear DtN c[" + std::to_string(n) + "] vs 2i k1 a", v,
                            2.0 * I * k1(n, w) * a.at(n), ctx.tol.linear_consistency,
                            Provenance::CrossFormula));
        }
    }

    for (const auto& p : ctx.config.eval_grid.xt) {
        const IdentityCheck id = contour_identity_check(p.x, p.t, contour);
        ctx.add(compare("contour identity x=" + fmt(p.x) + " t=" + fmt(p.t), id.lhs, id.rhs,
                        ctx.tol.identity, Provenance::CrossFormula, Criterion::Absolute));
        if (exact) {
            ctx.add(compare("quarter-plane u x=" + fmt(p.x) + " t=" + fmt(p.t),
                            solution_quarter_plane(spec, p.x, p.t), std::exp(-p.x) * std::polar(1.0, p.t),
                            ctx.tol.neumann_agreement, Provenance::ClosedForm));
        }
    }

    if (!lc.times.empty()) {
        DataTable t{{"t", "history_re", "history_im", "contour_re", "contour_im"}, {}};
        for (double time : lc.times) {
            const cplx h = neumann_from_history(spec, time);
            const cplx c = neumann_via_contour(spec, time, contour);
            t.rows.push_back({time, h.real(), h.imag(), c.real(), c.imag()});
            ctx.add(compare("Neumann history vs contour t=" + fmt(time), h, c, ctx.tol.neumann_agreement,
                            Provenance::CrossFormula));
            if (exact) {
                ctx.add(compare("Neumann exact t=" + fmt(time), h, -std::polar(1.0, time),
                                ctx.tol.neumann_agreement, Provenance::ClosedForm));
            }
        }
        ctx.bundle.tables["neumann"] = std::move(t);
    }

    if (lc.fit_samples > 0) {
        LinearProblemSpec quiet = spec;
        quiet.u0 = nullptr;
        quiet.u0_prime = nullptr;
        std::vector<std::pair<double, double>> samples;
        DataTable t{{"t", "deviation"}, {}};
        const double ratio = std::pow(lc.fit_t_max / lc.fit_t_min, 1.0 / (lc.fit_samples - 1));
        for (int i = 0; i < lc.fit_samples; ++i) {
            const double time = lc.fit_t_min * std::pow(ratio, i);
            const cplx periodic = -std::sqrt(wb) * std::polar(1.0, wb * time);
            const double dev = std::abs(neumann_from_history(quiet, time) - periodic);
            samples.emplace_back(time, dev);
            t.rows.push_back({time, dev});
        }
        const DecayFit fit = decay_rate_fit(samples);
        ctx.bundle.exponents.push_back({"Neumann deviation from periodic limit", fit.exponent,
                                        lc.expected_exponent, ctx.tol.exponent,
                                        std::abs(fit.exponent - lc.expected_exponent) <= ctx.tol.exponent});
        ctx.bundle.residuals["decay_fit_rms"] = fit.rms_residual;
        ctx.bundle.tables["decay"] = std::move(t);
    }

    if (lc.static_time > 0.0) {
        LinearProblemSpec constant;
        constant.g0 = [](double) { return cplx(1.0); };
        constant.g0_dot = [](double) { return cplx(0.0); };
        constant.rel_tol = ctx.tol.quadrature_rel;
        const double T = lc.static_time;
        const cplx g1 = neumann_from_history(constant, T);
        ctx.add(compare("constant datum g1 sqrt(pi t) e^{i pi/4} at t=" + fmt(T),
                        g1 * std::sqrt(std::numbers::pi * T) * std::polar(1.0, std::numbers::pi / 4), -1.0,
                        ctx.tol.asymptote, Provenance::ClosedForm, Criterion::Absolute));
    }
}

// -------------------------------------------------------------- summation

void run_summation(Context& ctx) {
    const SummationConfig& sc = *ctx.config.summation;
    const ProblemSpec spec = ctx.config.problem->to_spec();
    const HierarchySolution sol = ctx.solve_tracked(spec);
    if (ctx.config.wants("c_table")) ctx.bundle.c_table = sol.neumann;
    ctx.finish_riccati();

    // Closed forms exist for a single real positive amplitude at harmonic +-1.
    double amp = 0.0;
    if (sc.reference != SummationReference::None) {
        const int h = sc.reference == SummationReference::PerturbativeSum ? 1 : -1;
        const auto& d = ctx.config.problem->dirichlet;
        if (d.size() != 1 || d[0].order != 1 || d[0].harmonic != h || d[0].value.imag() != 0.0 ||
            !(d[0].value.real() > 0.0) || sc.harmonic != h) {
            throw ConfigError("summation.reference " + to_string(sc.reference) +
                              " needs problem.dirichlet = one real positive a[1," + std::to_string(h) +
                              "] and summation.harmonic = " + std::to_string(h));
        }
        amp = d[0].value.real();
    }
    const double w = spec.omega;
    const double lam = spec.lambda;
    // [m/m] agrees with the series through order 2m only, so its truncation
    // error starts one order later than that, not at order_max + 2.
    const int next_order = sc.method == SummationMethod::Pade ? 2 * pade_order(sol.completed_order) + 1
                                                              : sol.completed_order + 2;

    DataTable t{{"epsilon", "re", "im", "reference_re", "reference_im", "deviation", "scaled_deviation"}, {}};
    std::vector<double> scaled;
    for (double eps : sc.epsilons) {
        cplx value;
        try {
            value = sum_series(sol.neumann, sc.harmonic, eps, sc.method);
        } catch (const NumericalError& e) {
            ctx.bundle.notes.push_back(std::string("Pade acceleration failed (") + e.what() +
                                       "); fell back to the partial sum at eps = " + fmt(eps));
            value = sum_series(sol.neumann, sc.harmonic, eps, SummationMethod::Partial);
        }
        cplx ref{std::nan(""), std::nan("")};
        const double e = eps * amp;
        if (sc.reference == SummationReference::PerturbativeSum) {
            ref = closed_form_branch(e, w, Branch::PerturbativeSum, spec.lambda);
        } else if (sc.reference == SummationReference::NegativeExponential) {
            ref = I * e * std::sqrt(cplx(w - 2.0 * lam * e * e));
        }
        const double dev = std::abs(value - ref);
        const double sdev = dev / std::pow(eps, next_order);
        t.rows.push_back({eps, value.real(), value.imag(), ref.real(), ref.imag(), dev, sdev});
        if (sc.reference != SummationReference::None) {
            scaled.push_back(sdev);
            if (sc.method == SummationMethod::Partial) {
                ctx.add(compare("partial sum eps=" + fmt(eps) + " vs closed form (bound 2 eps^" +
                                    std::to_string(next_order) + ")",
                                value, ref, 2.0 * std::pow(e, next_order), Provenance::ClosedForm,
                                Criterion::Absolute));
            } else {
                ctx.add(compare("Pade eps=" + fmt(eps) + " vs closed form (bound 2 eps^" +
                                    std::to_string(next_order) + ")",
                                value, ref, 2.0 * std::pow(e, next_order), Provenance::ClosedForm,
                                Criterion::Absolute));
            }
        }
    }
    if (sc.method == SummationMethod::Partial && scaled.size() >= 2) {
        const auto [lo, hi] = std::minmax_element(scaled.begin(), scaled.end());
        const double variation = *lo > 0.0 ? *hi / *lo : std::numeric_limits<double>::infinity();
        ctx.bundle.residuals["summation_ratio_variation"] = variation;
        ctx.add(compare("deviation / eps^" + std::to_string(next_order) + " variation (max/min)", variation,
                        0.0, ctx.tol.ratio_variation, Provenance::ClosedForm, Criterion::Absolute));
    }
    ctx.bundle.tables["summation"] = std::move(t);
}

// ---------------------------------------------------------------- floquet

double log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void run_floquet(Context& ctx) {
    const FloquetConfig& fc = *ctx.config.floquet;
    const ProblemSpec spec = ctx.config.problem->to_spec();
    const HierarchySolution sol = ctx.solve_tracked(spec);
    if (ctx.config.wants("c_table")) ctx.bundle.c_table = sol.neumann;
    ctx.finish_riccati();

    FloquetOptions opt;
    opt.abs_tol = ctx.tol.integrator;
    opt.rel_tol = ctx.tol.integrator;
    const double tau = 2.0 * std::numbers::pi / spec.omega;

    DataTable t{{"k_re", "k_im", "epsilon", "G_re", "G_im", "deviation", "det_error"}, {}};
    for (const cplx k : ctx.config.eval_grid.k) {
        const cplx s = std::sin(2.0 * k * k * tau);
        const cplx unperturbed = -4.0 * s * s;
        const std::string tag = "k=" + fmt(k.real()) + (k.imag() < 0 ? "" : "+") + fmt(k.imag()) + "i";

        const FloquetResult base = floquet_monodromy(spec.dirichlet, sol.neumann, 0.0, spec.omega,
                                                     spec.lambda, k, opt);
        ctx.add(compare("G at eps=0 " + tag, base.discriminant, unperturbed, ctx.tol.determinant,
                        Provenance::ClosedForm, Criterion::Mixed));

        std::vector<double> eps, dev;
        for (double e : fc.epsilons) {
            const FloquetResult r = floquet_monodromy(spec.dirichlet, sol.neumann, e, spec.omega,
                                                      spec.lambda, k, opt);
            const cplx det = r.monodromy.determinant();
            const double d = std::abs(r.discriminant - unperturbed);
            t.rows.push_back({k.real(), k.imag(), e, r.discriminant.real(), r.discriminant.imag(), d,
                              std::abs(det - 1.0)});
            ctx.add(compare("det Z " + tag + " eps=" + fmt(e), det, 1.0, ctx.tol.determinant,
                            Provenance::ClosedForm, Criterion::Absolute));
            eps.push_back(e);
            dev.push_back(d);
        }
        bool positive = true;
        for (double d : dev) positive = positive && d > 0.0;
        const double slope = positive ? log_slope(eps, dev) : std::nan("");
        ctx.bundle.exponents.push_back({"|G + 4 sin^2(2k^2 tau)| vs eps, " + tag, slope, fc.expected_exponent,
                                        ctx.tol.exponent,
                                        std::abs(slope - fc.expected_exponent) <= ctx.tol.exponent});
    }
    ctx.bundle.tables["floquet"] = std::move(t);
}

[[noreturn]] void rethrow_with_context(const Error& e, const std::string& context) {
    const std::string what = context + ": " + e.what();
    switch (e.category()) {
        case Error::Category::Domain: throw DomainError(what);
        case Error::Category::Numerical: throw NumericalError(what);
        case Error::Category::Config: throw ConfigError(what);
        case Error::Category::Io: throw IoError(what);
    }
    throw NumericalError(what);
}

}  // namespace

ReportBundle run(const RunConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    ReportBundle bundle;
    bundle.mode = config.mode;
    bundle.config = config;
    Context ctx{config, bundle, config.tolerances};
    try {
        switch (config.mode) {
            case Mode::Solve: run_solve(ctx); break;
            case Mode::Verify: run_verify(ctx); break;
            case Mode::Linear: run_linear(ctx); break;
            case Mode::Summation: run_summation(ctx); break;
            case Mode::Floquet: run_floquet(ctx); break;
        }
    } catch (const Error& e) {
        rethrow_with_context(e, "run (mode " + to_string(config.mode) + ")");
    }
    bundle.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return bundle;
}

}  // namespace nlsdtn
