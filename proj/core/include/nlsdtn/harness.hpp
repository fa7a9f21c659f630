#pragma once

// Configuration, orchestration, series summation and reporting.

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlsdtn/fourier_core.hpp"
#include "nlsdtn/hierarchy.hpp"

namespace nlsdtn {

// ------------------------------------------------------------------ config

enum class Mode { Solve, Verify, Linear, Summation, Floquet };
enum class Provenance { PaperTable, ClosedForm, CrossFormula, BruteForce };
enum class VerifyCase {
    SingleExponential,
    NegativeExponential,
    TwoExponential,
    SineWave,
    TwoSoliton,
    StationarySoliton,
    FaultInjection,
};
enum class SummationMethod { Partial, Pade };
enum class SummationReference { None, PerturbativeSum, NegativeExponential };
enum class InitialDatum { Zero, Exponential };
enum class ReportFormat { Json, Csv, Human };
/// Relative/Absolute: error against reference within tolerance.
/// Mixed: abs_error / max(1, |reference|).
/// AtLeast: |value| >= tolerance (detection thresholds).
enum class Criterion { Relative, Absolute, Mixed, AtLeast };

std::string to_string(Mode m);
std::string to_string(Provenance p);
std::string to_string(VerifyCase v);
std::string to_string(SummationMethod m);
std::string to_string(SummationReference r);
std::string to_string(InitialDatum d);
std::string to_string(ReportFormat f);
std::string to_string(Criterion c);
/// Throws ConfigError naming the rejected value.
Mode parse_mode(const std::string& s);
ReportFormat parse_format(const std::string& s);

struct CoefficientEntry {
    int order = 1;
    int harmonic = 0;
    cplx value{};
    bool operator==(const CoefficientEntry&) const = default;
};

struct ExpectedEntry {
    int order = 1;
    int harmonic = 0;
    cplx value{};
    Provenance provenance = Provenance::PaperTable;
    bool operator==(const ExpectedEntry&) const = default;
};

struct ProblemConfig {
    double omega = 1.0;
    int lambda = 1;
    int order_max = 1;
    std::vector<CoefficientEntry> dirichlet;

    ProblemSpec to_spec() const;
    bool operator==(const ProblemConfig&) const = default;
};

struct Tolerances {
    double comparison_rel = 1e-9;
    double extraction_rel = 1e-6;
    double residual = 1e-9;
    double fault_detection = 1e-4;
    double identity = 1e-8;
    double neumann_agreement = 1e-6;
    double linear_consistency = 1e-13;
    double asymptote = 1e-4;
    double exponent = 0.1;
    double determinant = 1e-10;
    double finite_difference = 1e-8;
    /// entries the closed forms say vanish must stay below this in modulus
    double spurious_entry = 1e-12;
    double ratio_variation = 4.0;
    double removability = 1e-8;
    double pole = 1e-13;
    double mean_zero = 1e-12;
    double quadrature_rel = 1e-12;
    double integrator = 1e-13;
    int degree_cap = 64;

    HierarchyOptions hierarchy_options() const;
    bool operator==(const Tolerances&) const = default;
};

struct XTPoint {
    double x = 0.0;
    double t = 0.0;
    bool operator==(const XTPoint&) const = default;
};

struct EvalGrid {
    std::vector<cplx> k;
    std::vector<XTPoint> xt;
    bool operator==(const EvalGrid&) const = default;
};

struct ExponentialPair {
    cplx alpha;  // a_{1,1}
    cplx beta;   // a_{1,-1}
    bool operator==(const ExponentialPair&) const = default;
};

struct VerifyConfig {
    std::vector<VerifyCase> cases;
    /// epsilon values for the two-soliton extraction
    std::vector<double> epsilons{0.0005, 0.001, 0.002, 0.004, 0.008};
    /// Dirichlet amplitudes for the two-exponential table check
    std::vector<ExponentialPair> pairs{{{1.0, 0.0}, {1.0, 0.0}}, {{0.7, 0.2}, {-0.3, 0.5}}};
    double soliton_gamma = 0.7;
    bool operator==(const VerifyConfig&) const = default;
};

struct LinearConfig {
    /// g0(t) = e^{i boundary_omega t}
    double boundary_omega = 1.0;
    InitialDatum initial = InitialDatum::Zero;
    /// times at which the history and contour Neumann formulas are compared
    std::vector<double> times;
    /// decay fit of |g1(t) + g0(t)| over [fit_t_min, fit_t_max]; disabled when fit_samples == 0
    double fit_t_min = 50.0;
    double fit_t_max = 3200.0;
    int fit_samples = 0;
    double expected_exponent = -1.5;
    /// time of the constant-datum asymptote check; 0 disables it
    double static_time = 0.0;
    bool operator==(const LinearConfig&) const = default;
};

struct SummationConfig {
    int harmonic = 1;
    std::vector<double> epsilons;
    SummationMethod method = SummationMethod::Partial;
    SummationReference reference = SummationReference::None;
    bool operator==(const SummationConfig&) const = default;
};

struct FloquetConfig {
    std::vector<double> epsilons;
    double expected_exponent = 2.0;
    bool operator==(const FloquetConfig&) const = default;
};

struct RunConfig {
    Mode mode = Mode::Solve;
    std::optional<ProblemConfig> problem;
    /// subset of {"c_table", "d_grid", "residuals"}
    std::vector<std::string> outputs{"c_table", "residuals"};
    Tolerances tolerances;
    EvalGrid eval_grid;
    std::vector<ExpectedEntry> expected;
    std::optional<VerifyConfig> verify;
    std::optional<LinearConfig> linear;
    std::optional<SummationConfig> summation;
    std::optional<FloquetConfig> floquet;

    /// Mode-specific completeness and positivity checks; throws ConfigError naming the field.
    void validate() const;
    bool wants(const std::string& output) const;
    bool operator==(const RunConfig&) const = default;
};

/// Ready-to-run configuration for each mode (the documented reference cases).
RunConfig default_config(Mode mode);

/// Parses and validates; unknown keys are rejected. Errors carry the line or field.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const std::string& text, const std::string& origin = "<string>");
/// Fully expanded config (defaults filled in) as JSON text; parse_config inverts it.
std::string config_to_json(const RunConfig& config);

// ------------------------------------------------------------------ report

struct Comparison {
    std::string name;
    cplx value{};
    cplx reference{};
    double abs_error = 0.0;
    double rel_error = 0.0;
    double tolerance = 0.0;
    Provenance provenance = Provenance::CrossFormula;
    Criterion criterion = Criterion::Relative;
    bool passed = false;
};

/// Builds a comparison and decides pass/fail.
Comparison compare(std::string name, cplx value, cplx reference, double tolerance,
                   Provenance provenance, Criterion criterion = Criterion::Relative);

struct FittedExponent {
    std::string name;
    double exponent = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Named numeric columns for external plotting.
struct DataTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct ReportBundle {
    Mode mode = Mode::Solve;
    GradedCoefficients c_table;
    std::map<std::string, double> residuals;
    std::vector<Comparison> comparisons;
    std::vector<FittedExponent> exponents;
    std::map<std::string, DataTable> tables;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;
    RunConfig config;

    bool passed() const;
};

ReportBundle run(const RunConfig& config);

// --------------------------------------------------------------- summation

/// sum_{N <= order_max} c_{N,n} eps^N, or the diagonal Pade approximant built
/// from the same coefficients. Pade failure raises NumericalError.
cplx sum_series(const GradedCoefficients& c, int harmonic, double epsilon, SummationMethod method);

/// Largest diagonal Pade order m (m <= 4) available from coefficients through order_max.
int pade_order(int order_max);

// ------------------------------------------------------------------ output

struct EmitOptions {
    /// Wall-clock time breaks byte-for-byte reproducibility, so it is opt-in.
    bool include_timing = false;
};

void write_report(const ReportBundle& bundle, ReportFormat format, std::ostream& os,
                  const EmitOptions& opt = {});

/// Writes the report to `path`. For csv, extra data tables go to
/// <stem>.<table>.csv next to it. Returns every file written.
std::vector<std::filesystem::path> emit_report(const ReportBundle& bundle, ReportFormat format,
                                               const std::filesystem::path& path,
                                               const EmitOptions& opt = {});

/// printf %.17g; non-finite values become "nan", "inf" or "-inf".
std::string format_double(double v);

}  // namespace nlsdtn
