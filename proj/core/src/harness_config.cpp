#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "json_text.hpp"
#include "nlsdtn/harness.hpp"

namespace nlsdtn {

using nlohmann::json;

// ---------------------------------------------------------- enum spellings

namespace {

template <class E>
struct Spelling {
    E value;
    const char* text;
};

constexpr Spelling<Mode> kModes[] = {{Mode::Solve, "solve"},
                                     {Mode::Verify, "verify"},
                                     {Mode::Linear, "linear"},
                                     {Mode::Summation, "summation"},
                                     {Mode::Floquet, "floquet"}};
constexpr Spelling<Provenance> kProvenances[] = {{Provenance::PaperTable, "paper-table"},
                                                 {Provenance::ClosedForm, "closed-form"},
                                                 {Provenance::CrossFormula, "cross-formula"},
                                                 {Provenance::BruteForce, "brute-force"}};
constexpr Spelling<VerifyCase> kCases[] = {
    {VerifyCase::SingleExponential, "single-exponential"},
    {VerifyCase::NegativeExponential, "negative-exponential"},
    {VerifyCase::TwoExponential, "two-exponential"},
    {VerifyCase::SineWave, "sine-wave"},
    {VerifyCase::TwoSoliton, "two-soliton"},
    {VerifyCase::StationarySoliton, "stationary-soliton"},
    {VerifyCase::FaultInjection, "fault-injection"}};
constexpr Spelling<SummationMethod> kMethods[] = {{SummationMethod::Partial, "partial"},
                                                  {SummationMethod::Pade, "pade"}};
constexpr Spelling<SummationReference> kReferences[] = {
    {SummationReference::None, "none"},
    {SummationReference::PerturbativeSum, "perturbative-sum"},
    {SummationReference::NegativeExponential, "negative-exponential"}};
constexpr Spelling<InitialDatum> kInitials[] = {{InitialDatum::Zero, "zero"},
                                                {InitialDatum::Exponential, "exponential"}};
constexpr Spelling<Criterion> kCriteria[] = {{Criterion::Relative, "relative"},
                                             {Criterion::Absolute, "absolute"},
                                             {Criterion::Mixed, "mixed"},
                                             {Criterion::AtLeast, "at-least"}};
constexpr Spelling<ReportFormat> kFormats[] = {
    {ReportFormat::Json, "json"}, {ReportFormat::Csv, "csv"}, {ReportFormat::Human, "human"}};

template <class E, std::size_t K>
std::string spell(const Spelling<E> (&table)[K], E v) {
    for (const auto& s : table) {
        if (s.value == v) return s.text;
    }
    return "?";
}

template <class E, std::size_t K>
E unspell(const Spelling<E> (&table)[K], const std::string& text, const std::string& field) {
    for (const auto& s : table) {
        if (text == s.text) return s.value;
    }
    std::string allowed;
    for (const auto& s : table) allowed += (allowed.empty() ? "" : ", ") + std::string(s.text);
    throw ConfigError(field + ": unknown value \"" + text + "\" (expected one of " + allowed + ")");
}

}  // namespace

std::string to_string(Mode m) { return spell(kModes, m); }
std::string to_string(Provenance p) { return spell(kProvenances, p); }
std::string to_string(VerifyCase v) { return spell(kCases, v); }
std::string to_string(SummationMethod m) { return spell(kMethods, m); }
std::string to_string(SummationReference r) { return spell(kReferences, r); }
std::string to_string(InitialDatum d) { return spell(kInitials, d); }
std::string to_string(ReportFormat f) { return spell(kFormats, f); }
std::string to_string(Criterion c) { return spell(kCriteria, c); }
Mode parse_mode(const std::string& s) { return unspell(kModes, s, "mode"); }
ReportFormat parse_format(const std::string& s) { return unspell(kFormats, s, "format"); }

// ---------------------------------------------------------------- problem

ProblemSpec ProblemConfig::to_spec() const {
    ProblemSpec spec;
    spec.omega = omega;
    spec.lambda = lambda;
    spec.order_max = order_max;
    spec.dirichlet = GradedCoefficients(omega);
    for (const auto& e : dirichlet) spec.dirichlet.set(e.order, e.harmonic, e.value);
    return spec;
}

HierarchyOptions Tolerances::hierarchy_options() const {
    HierarchyOptions opt;
    opt.rational.degree_cap = degree_cap;
    opt.rational.removability_tol = removability;
    opt.rational.pole_tol = pole;
    opt.mean_zero_tol = mean_zero;
    return opt;
}

bool RunConfig::wants(const std::string& output) const {
    return std::find(outputs.begin(), outputs.end(), output) != outputs.end();
}

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
    if (!ok) throw ConfigError(field + ": " + what);
}

void require_positive_list(const std::vector<double>& v, const std::string& field,
                           std::size_t min_size) {
    require(v.size() >= min_size, field, "needs at least " + std::to_string(min_size) + " values");
    for (double e : v) require(std::isfinite(e) && e > 0.0, field, "values must be positive");
}

void validate_tolerances(const Tolerances& t) {
    const std::pair<const char*, double> fields[] = {
        {"comparison_rel", t.comparison_rel},     {"extraction_rel", t.extraction_rel},
        {"residual", t.residual},                 {"fault_detection", t.fault_detection},
        {"identity", t.identity},                 {"neumann_agreement", t.neumann_agreement},
        {"linear_consistency", t.linear_consistency}, {"asymptote", t.asymptote},
        {"exponent", t.exponent},                 {"determinant", t.determinant},
        {"finite_difference", t.finite_difference}, {"spurious_entry", t.spurious_entry},
        {"ratio_variation", t.ratio_variation},   {"removability", t.removability},
        {"pole", t.pole},                         {"mean_zero", t.mean_zero},
        {"quadrature_rel", t.quadrature_rel},     {"integrator", t.integrator}};
    for (const auto& [name, v] : fields) {
        require(std::isfinite(v) && v > 0.0, std::string("tolerances.") + name, "must be positive");
    }
    require(t.degree_cap >= 1, "tolerances.degree_cap", "must be positive");
    require(t.ratio_variation > 1.0, "tolerances.ratio_variation", "must exceed 1");
}

void validate_problem(const ProblemConfig& p) {
    require(std::isfinite(p.omega) && p.omega > 0.0, "problem.omega", "must be positive");
    require(p.lambda == 1 || p.lambda == -1, "problem.lambda", "must be +1 or -1");
    require(p.order_max >= 1, "problem.order_max", "must be >= 1");
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < p.dirichlet.size(); ++i) {
        const auto& e = p.dirichlet[i];
        const std::string field = "problem.dirichlet[" + std::to_string(i) + "]";
        require(e.order >= 1, field + ".order", "must be >= 1");
        require(std::isfinite(e.value.real()) && std::isfinite(e.value.imag()), field,
                "value must be finite");
        require(seen.insert({e.order, e.harmonic}).second, field,
                "duplicate (order, harmonic) entry");
        require(e.harmonic != 0 || e.value == cplx{}, field,
                "mean-zero violation: harmonic 0 must vanish");
    }
}

}  // namespace

void RunConfig::validate() const {
    validate_tolerances(tolerances);
    for (const auto& o : outputs) {
        require(o == "c_table" || o == "d_grid" || o == "residuals", "outputs",
                "unknown artifact \"" + o + "\"");
    }
    if (problem) validate_problem(*problem);
    for (const auto& p : eval_grid.xt) {
        require(std::isfinite(p.x) && p.x >= 0.0, "eval_grid.xt.x", "must be >= 0");
        require(std::isfinite(p.t) && p.t > 0.0, "eval_grid.xt.t", "must be positive");
    }
    if (wants("d_grid")) require(!eval_grid.k.empty(), "eval_grid.k", "required by output d_grid");

    const bool has_dirichlet = problem && !problem->dirichlet.empty();
    switch (mode) {
        case Mode::Solve:
            require(has_dirichlet, "problem.dirichlet", "required for mode solve");
            break;
        case Mode::Verify:
            require(verify.has_value() && !verify->cases.empty(), "verify.cases",
                    "required for mode verify");
            for (const auto& c : verify->cases) {
                if (c == VerifyCase::TwoSoliton) require_positive_list(verify->epsilons, "verify.epsilons", 4);
            }
            require(std::isfinite(verify->soliton_gamma) && verify->soliton_gamma != 0.0,
                    "verify.soliton_gamma", "must be finite and nonzero");
            break;
        case Mode::Linear:
            require(linear.has_value(), "linear", "required for mode linear");
            require(std::isfinite(linear->boundary_omega) && linear->boundary_omega >= 0.0,
                    "linear.boundary_omega", "must be >= 0");
            for (double t : linear->times) require(std::isfinite(t) && t > 0.0, "linear.times", "must be positive");
            if (linear->fit_samples != 0) {
                require(linear->fit_samples >= 8, "linear.fit_samples", "must be 0 or >= 8");
                require(linear->fit_t_min > 0.0 && linear->fit_t_max > linear->fit_t_min,
                        "linear.fit_t_max", "needs 0 < fit_t_min < fit_t_max");
            }
            require(std::isfinite(linear->static_time) && linear->static_time >= 0.0,
                    "linear.static_time", "must be >= 0");
            break;
        case Mode::Summation:
            require(has_dirichlet, "problem.dirichlet", "required for mode summation");
            require(summation.has_value(), "summation", "required for mode summation");
            require_positive_list(summation->epsilons, "summation.epsilons", 1);
            break;
        case Mode::Floquet:
            require(has_dirichlet, "problem.dirichlet", "required for mode floquet");
            require(floquet.has_value(), "floquet", "required for mode floquet");
            require_positive_list(floquet->epsilons, "floquet.epsilons", 2);
            require(!eval_grid.k.empty(), "eval_grid.k", "required for mode floquet");
            break;
    }
}

// --------------------------------------------------------------- defaults

RunConfig default_config(Mode mode) {
    RunConfig c;
    c.mode = mode;
    const cplx half_over_i = 1.0 / cplx(0.0, 2.0);
    switch (mode) {
        case Mode::Solve:
            c.problem = ProblemConfig{1.0, 1, 7, {{1, 1, 1.0}}};
            break;
        case Mode::Verify:
            c.verify = VerifyConfig{};
            for (const auto& s : kCases) c.verify->cases.push_back(s.value);
            break;
        case Mode::Linear:
            c.problem = ProblemConfig{1.0, 1, 1, {{1, 1, 1.0}, {1, -1, 1.0}, {1, 2, {0.0, 0.5}}, {1, -3, 0.25}}};
            c.linear = LinearConfig{};
            c.linear->times = {1.0, 5.0, 20.0};
            c.linear->fit_samples = 13;
            c.linear->static_time = 1e4;
            for (double x : {0.0, 1.0, 3.0}) {
                for (double t : {0.5, 1.0, 100.0}) c.eval_grid.xt.push_back({x, t});
            }
            break;
        case Mode::Summation:
            c.problem = ProblemConfig{1.0, 1, 7, {{1, 1, 1.0}}};
            c.summation = SummationConfig{1, {0.2, 0.1, 0.05, 0.025}, SummationMethod::Partial,
                                          SummationReference::PerturbativeSum};
            break;
        case Mode::Floquet:
            c.problem = ProblemConfig{1.0, 1, 3, {{1, 1, half_over_i}, {1, -1, -half_over_i}}};
            c.floquet = FloquetConfig{{1e-2, 5e-3, 2.5e-3}, 2.0};
            c.eval_grid.k = {{0.3, 0.1}, {0.7, 0.0}, {0.5, 0.4}};
            break;
    }
    return c;
}

// ------------------------------------------------------------ JSON reader

namespace {

/// Object view that remembers which keys were read, so leftovers can be
/// reported as unknown.
class Reader {
public:
    Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError(where() + ": expected an object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const json* get(const std::string& key) {
        used_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    double number(const std::string& key, double fallback) {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_number()) throw ConfigError(field(key) + ": expected a number");
        return v->get<double>();
    }

    int integer(const std::string& key, int fallback) {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_number_integer()) throw ConfigError(field(key) + ": expected an integer");
        return v->get<int>();
    }

    bool boolean(const std::string& key, bool fallback) {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_boolean()) throw ConfigError(field(key) + ": expected true or false");
        return v->get<bool>();
    }

    std::string text(const std::string& key, const std::string& fallback) {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_string()) throw ConfigError(field(key) + ": expected a string");
        return v->get<std::string>();
    }

    std::vector<double> numbers(const std::string& key, std::vector<double> fallback) {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_array()) throw ConfigError(field(key) + ": expected an array of numbers");
        std::vector<double> out;
        for (const auto& e : *v) {
            if (!e.is_number()) throw ConfigError(field(key) + ": expected an array of numbers");
            out.push_back(e.get<double>());
        }
        return out;
    }

    const json* array(const std::string& key) {
        const json* v = get(key);
        if (v && !v->is_array()) throw ConfigError(field(key) + ": expected an array");
        return v;
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!used_.count(it.key())) throw ConfigError(field(it.key()) + ": unknown key");
        }
    }

    std::string where() const { return path_.empty() ? "config" : path_; }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> used_;
};

cplx read_complex(const json& j, const std::string& path) {
    Reader r(j, path);
    const cplx v{r.number("re", 0.0), r.number("im", 0.0)};
    r.finish();
    return v;
}

template <class Fn>
void for_each_element(const json* arr, const std::string& field, Fn fn) {
    if (!arr) return;
    std::size_t i = 0;
    for (const auto& e : *arr) fn(e, field + "[" + std::to_string(i++) + "]");
}

ProblemConfig read_problem(const json& j) {
    Reader r(j, "problem");
    ProblemConfig p;
    p.omega = r.number("omega", p.omega);
    p.lambda = r.integer("lambda", p.lambda);
    p.order_max = r.integer("order_max", p.order_max);
    for_each_element(r.array("dirichlet"), "problem.dirichlet", [&](const json& e, const std::string& f) {
        Reader er(e, f);
        CoefficientEntry c;
        c.order = er.integer("order", 0);
        c.harmonic = er.integer("harmonic", 0);
        c.value = {er.number("re", 0.0), er.number("im", 0.0)};
        if (!e.contains("order") || !e.contains("harmonic")) {
            throw ConfigError(f + ": order and harmonic are required");
        }
        er.finish();
        p.dirichlet.push_back(c);
    });
    r.finish();
    return p;
}

Tolerances read_tolerances(const json& j) {
    Reader r(j, "tolerances");
    Tolerances t;
    t.comparison_rel = r.number("comparison_rel", t.comparison_rel);
    t.extraction_rel = r.number("extraction_rel", t.extraction_rel);
    t.residual = r.number("residual", t.residual);
    t.fault_detection = r.number("fault_detection", t.fault_detection);
    t.identity = r.number("identity", t.identity);
    t.neumann_agreement = r.number("neumann_agreement", t.neumann_agreement);
    t.linear_consistency = r.number("linear_consistency", t.linear_consistency);
    t.asymptote = r.number("asymptote", t.asymptote);
    t.exponent = r.number("exponent", t.exponent);
    t.determinant = r.number("determinant", t.determinant);
    t.finite_difference = r.number("finite_difference", t.finite_difference);
    t.spurious_entry = r.number("spurious_entry", t.spurious_entry);
    t.ratio_variation = r.number("ratio_variation", t.ratio_variation);
    t.removability = r.number("removability", t.removability);
    t.pole = r.number("pole", t.pole);
    t.mean_zero = r.number("mean_zero", t.mean_zero);
    t.quadrature_rel = r.number("quadrature_rel", t.quadrature_rel);
    t.integrator = r.number("integrator", t.integrator);
    t.degree_cap = r.integer("degree_cap", t.degree_cap);
    r.finish();
    return t;
}

EvalGrid read_grid(const json& j) {
    Reader r(j, "eval_grid");
    EvalGrid g;
    for_each_element(r.array("k"), "eval_grid.k",
                     [&](const json& e, const std::string& f) { g.k.push_back(read_complex(e, f)); });
    for_each_element(r.array("xt"), "eval_grid.xt", [&](const json& e, const std::string& f) {
        Reader pr(e, f);
        g.xt.push_back({pr.number("x", 0.0), pr.number("t", 0.0)});
        pr.finish();
    });
    r.finish();
    return g;
}

VerifyConfig read_verify(const json& j) {
    Reader r(j, "verify");
    VerifyConfig v;
    if (const json* cases = r.array("cases")) {
        std::size_t i = 0;
        for (const auto& e : *cases) {
            const std::string f = "verify.cases[" + std::to_string(i++) + "]";
            if (!e.is_string()) throw ConfigError(f + ": expected a string");
            v.cases.push_back(unspell(kCases, e.get<std::string>(), f));
        }
    }
    v.epsilons = r.numbers("epsilons", v.epsilons);
    if (const json* pairs = r.array("pairs")) {
        v.pairs.clear();
        for_each_element(pairs, "verify.pairs", [&](const json& e, const std::string& f) {
            Reader pr(e, f);
            ExponentialPair p{{}, {}};
            if (const json* a = pr.get("alpha")) p.alpha = read_complex(*a, f + ".alpha");
            if (const json* b = pr.get("beta")) p.beta = read_complex(*b, f + ".beta");
            pr.finish();
            v.pairs.push_back(p);
        });
    }
    v.soliton_gamma = r.number("soliton_gamma", v.soliton_gamma);
    r.finish();
    return v;
}

LinearConfig read_linear(const json& j) {
    Reader r(j, "linear");
    LinearConfig l;
    l.boundary_omega = r.number("boundary_omega", l.boundary_omega);
    l.initial = unspell(kInitials, r.text("initial", to_string(l.initial)), "linear.initial");
    l.times = r.numbers("times", l.times);
    l.fit_t_min = r.number("fit_t_min", l.fit_t_min);
    l.fit_t_max = r.number("fit_t_max", l.fit_t_max);
    l.fit_samples = r.integer("fit_samples", l.fit_samples);
    l.expected_exponent = r.number("expected_exponent", l.expected_exponent);
    l.static_time = r.number("static_time", l.static_time);
    r.finish();
    return l;
}

SummationConfig read_summation(const json& j) {
    Reader r(j, "summation");
    SummationConfig s;
    s.harmonic = r.integer("harmonic", s.harmonic);
    s.epsilons = r.numbers("epsilons", s.epsilons);
    s.method = unspell(kMethods, r.text("method", to_string(s.method)), "summation.method");
    s.reference =
        unspell(kReferences, r.text("reference", to_string(s.reference)), "summation.reference");
    r.finish();
    return s;
}

FloquetConfig read_floquet(const json& j) {
    Reader r(j, "floquet");
    FloquetConfig f;
    f.epsilons = r.numbers("epsilons", f.epsilons);
    f.expected_exponent = r.number("expected_exponent", f.expected_exponent);
    r.finish();
    return f;
}

std::string line_column(const std::string& text, std::size_t byte) {
    byte = std::min(byte, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        // Drop nlohmann's "[json.exception.parse_error.101] parse error at line ..." prefix.
        if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
        throw ConfigError(origin + ": " + line_column(text, e.byte) + ": " + msg);
    }

    RunConfig c;
    try {
        Reader r(j, "");
        const json* mode = r.get("mode");
        if (!mode || !mode->is_string()) throw ConfigError("mode: required string");
        c.mode = parse_mode(mode->get<std::string>());
        if (const json* p = r.get("problem")) c.problem = read_problem(*p);
        if (const json* o = r.array("outputs")) {
            c.outputs.clear();
            for (const auto& e : *o) {
                if (!e.is_string()) throw ConfigError("outputs: expected strings");
                c.outputs.push_back(e.get<std::string>());
            }
        }
        if (const json* t = r.get("tolerances")) c.tolerances = read_tolerances(*t);
        if (const json* g = r.get("eval_grid")) c.eval_grid = read_grid(*g);
        for_each_element(r.array("expected"), "expected", [&](const json& e, const std::string& f) {
            Reader er(e, f);
            ExpectedEntry x;
            x.order = er.integer("order", 0);
            x.harmonic = er.integer("harmonic", 0);
            x.value = {er.number("re", 0.0), er.number("im", 0.0)};
            x.provenance = unspell(kProvenances, er.text("provenance", to_string(x.provenance)),
                                   f + ".provenance");
            er.finish();
            c.expected.push_back(x);
        });
        if (const json* v = r.get("verify")) c.verify = read_verify(*v);
        if (const json* l = r.get("linear")) c.linear = read_linear(*l);
        if (const json* s = r.get("summation")) c.summation = read_summation(*s);
        if (const json* f = r.get("floquet")) c.floquet = read_floquet(*f);
        r.finish();
        c.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(origin + ": " + e.what());
    } catch (const json::exception& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.string());
}

// ------------------------------------------------------------ JSON writer

namespace {

json complex_json(cplx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

}  // namespace

nlohmann::json config_json(const RunConfig& c) {
    json j;
    j["mode"] = to_string(c.mode);
    if (c.problem) {
        json d = json::array();
        for (const auto& e : c.problem->dirichlet) {
            d.push_back({{"order", e.order}, {"harmonic", e.harmonic}, {"re", e.value.real()},
                         {"im", e.value.imag()}});
        }
        j["problem"] = {{"omega", c.problem->omega},
                        {"lambda", c.problem->lambda},
                        {"order_max", c.problem->order_max},
                        {"dirichlet", d}};
    }
    j["outputs"] = c.outputs;
    const auto& t = c.tolerances;
    j["tolerances"] = {{"comparison_rel", t.comparison_rel},
                       {"extraction_rel", t.extraction_rel},
                       {"residual", t.residual},
                       {"fault_detection", t.fault_detection},
                       {"identity", t.identity},
                       {"neumann_agreement", t.neumann_agreement},
                       {"linear_consistency", t.linear_consistency},
                       {"asymptote", t.asymptote},
                       {"exponent", t.exponent},
                       {"determinant", t.determinant},
                       {"finite_difference", t.finite_difference},
                       {"spurious_entry", t.spurious_entry},
                       {"ratio_variation", t.ratio_variation},
                       {"removability", t.removability},
                       {"pole", t.pole},
                       {"mean_zero", t.mean_zero},
                       {"quadrature_rel", t.quadrature_rel},
                       {"integrator", t.integrator},
                       {"degree_cap", t.degree_cap}};
    json ks = json::array();
    for (const auto& k : c.eval_grid.k) ks.push_back(complex_json(k));
    json xts = json::array();
    for (const auto& p : c.eval_grid.xt) xts.push_back({{"x", p.x}, {"t", p.t}});
    j["eval_grid"] = {{"k", ks}, {"xt", xts}};
    json ex = json::array();
    for (const auto& e : c.expected) {
        ex.push_back({{"order", e.order}, {"harmonic", e.harmonic}, {"re", e.value.real()},
                      {"im", e.value.imag()}, {"provenance", to_string(e.provenance)}});
    }
    j["expected"] = ex;
    if (c.verify) {
        json cases = json::array();
        for (auto v : c.verify->cases) cases.push_back(to_string(v));
        json pairs = json::array();
        for (const auto& p : c.verify->pairs) {
            pairs.push_back({{"alpha", complex_json(p.alpha)}, {"beta", complex_json(p.beta)}});
        }
        j["verify"] = {{"cases", cases},
                       {"epsilons", c.verify->epsilons},
                       {"pairs", pairs},
                       {"soliton_gamma", c.verify->soliton_gamma}};
    }
    if (c.linear) {
        const auto& l = *c.linear;
        j["linear"] = {{"boundary_omega", l.boundary_omega}, {"initial", to_string(l.initial)},
                       {"times", l.times},                   {"fit_t_min", l.fit_t_min},
                       {"fit_t_max", l.fit_t_max},           {"fit_samples", l.fit_samples},
                       {"expected_exponent", l.expected_exponent},
                       {"static_time", l.static_time}};
    }
    if (c.summation) {
        const auto& s = *c.summation;
        j["summation"] = {{"harmonic", s.harmonic},
                          {"epsilons", s.epsilons},
                          {"method", to_string(s.method)},
                          {"reference", to_string(s.reference)}};
    }
    if (c.floquet) {
        j["floquet"] = {{"epsilons", c.floquet->epsilons},
                        {"expected_exponent", c.floquet->expected_exponent}};
    }
    return j;
}

std::string config_to_json(const RunConfig& config) { return detail::dump_json(config_json(config)) + "\n"; }

}  // namespace nlsdtn
