#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "nlsdtn/harness.hpp"
#include "test_support.hpp"

namespace nlsdtn {
namespace {

using testing::complex_abs_near;
using testing::I;

const char* kMinimalSolve = R"({
  "mode": "solve",
  "problem": {
    "omega": 1, "lambda": 1, "order_max": 3,
    "dirichlet": [{"order": 1, "harmonic": 1, "re": 1, "im": 0}]
  }
})";

std::string message_of(const std::string& text) {
    try {
        parse_config(text, "cfg.json");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

TEST(Config, MinimalSolveParses) {
    const auto c = parse_config(kMinimalSolve);
    EXPECT_EQ(c.mode, Mode::Solve);
    ASSERT_TRUE(c.problem);
    EXPECT_EQ(c.problem->order_max, 3);
    ASSERT_EQ(c.problem->dirichlet.size(), 1u);
    EXPECT_EQ(c.tolerances, Tolerances{});
}

TEST(Config, UnknownKeysRejectedWithPath) {
    std::string text = kMinimalSolve;
    text.replace(text.find("\"order_max\""), 0, "\"omgea\": 2, ");
    EXPECT_NE(message_of(text).find("problem.omgea: unknown key"), std::string::npos) << message_of(text);
    EXPECT_NE(message_of(R"({"mode": "solve", "colour": 1})").find("colour: unknown key"), std::string::npos);
    EXPECT_NE(message_of(R"({"mode": "verify", "verify": {"cases": ["two-soliton"], "epsilon": [1]}})")
                  .find("verify.epsilon"),
              std::string::npos);
}

TEST(Config, SyntaxErrorsCarryLineAndColumn) {
    const std::string msg = message_of("{\n  \"mode\": \"solve\",\n  \"problem\": {,}\n}");
    EXPECT_NE(msg.find("cfg.json: line 3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Config, MeanZeroViolationRejected) {
    std::string text = kMinimalSolve;
    text.replace(text.find("\"harmonic\": 1"), 13, "\"harmonic\": 0");
    EXPECT_NE(message_of(text).find("mean-zero"), std::string::npos) << message_of(text);
}

TEST(Config, BadValuesRejected) {
    EXPECT_FALSE(message_of(R"({"mode": "tango"})").empty());
    EXPECT_FALSE(message_of(R"({"mode": "solve"})").empty());  // no dirichlet
    std::string neg = kMinimalSolve;
    neg.replace(neg.find("\"omega\": 1"), 10, "\"omega\": -1");
    EXPECT_NE(message_of(neg).find("omega"), std::string::npos);
    std::string lam = kMinimalSolve;
    lam.replace(lam.find("\"lambda\": 1"), 11, "\"lambda\": 3");
    EXPECT_NE(message_of(lam).find("lambda"), std::string::npos);
    std::string frac = kMinimalSolve;
    frac.replace(frac.find("\"order_max\": 3"), 14, "\"order_max\": 2.5");
    EXPECT_NE(message_of(frac).find("integer"), std::string::npos);
    EXPECT_FALSE(message_of(R"({"mode": "verify", "verify": {"cases": ["nope"]}})").empty());
    EXPECT_FALSE(message_of(R"({"mode": "floquet", "problem": {"dirichlet": [{"order": 1, "harmonic": 1}]},
                               "floquet": {"epsilons": [0.1, 0.2]}})")
                     .empty());  // eval_grid.k missing
}

TEST(Config, RoundTripsEveryDefault) {
    for (Mode m : {Mode::Solve, Mode::Verify, Mode::Linear, Mode::Summation, Mode::Floquet}) {
        const RunConfig c = default_config(m);
        EXPECT_NO_THROW(c.validate()) << to_string(m);
        const RunConfig back = parse_config(config_to_json(c));
        EXPECT_TRUE(back == c) << to_string(m);
        EXPECT_EQ(config_to_json(back), config_to_json(c));
    }
}

TEST(Config, LoadFromFile) {
    const auto path = std::filesystem::temp_directory_path() / "nlsdtn_cfg_test.json";
    std::ofstream(path) << kMinimalSolve;
    EXPECT_EQ(load_config(path).problem->order_max, 3);
    std::filesystem::remove(path);
    EXPECT_THROW(load_config(path), Error);
}

TEST(Report, FormatDouble) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(-2.0), "-2");
    EXPECT_EQ(format_double(std::nan("")), "nan");
    EXPECT_EQ(format_double(-INFINITY), "-inf");
}

TEST(Report, CompareCriteria) {
    EXPECT_TRUE(compare("r", 1.0 + 1e-10, 1.0, 1e-9, Provenance::ClosedForm).passed);
    EXPECT_FALSE(compare("r", 1.1, 1.0, 1e-9, Provenance::ClosedForm).passed);
    EXPECT_TRUE(compare("a", 1e-13, 0.0, 1e-12, Provenance::ClosedForm, Criterion::Absolute).passed);
    EXPECT_TRUE(compare("m", 50.0 + 1e-9, 50.0, 1e-10, Provenance::ClosedForm, Criterion::Mixed).passed);
    EXPECT_FALSE(compare("m", 0.01 + 1e-9, 0.01, 1e-10, Provenance::ClosedForm, Criterion::Mixed).passed);
    EXPECT_TRUE(compare("l", 1e-3, 0.0, 1e-4, Provenance::CrossFormula, Criterion::AtLeast).passed);
    EXPECT_FALSE(compare("l", 1e-5, 0.0, 1e-4, Provenance::CrossFormula, Criterion::AtLeast).passed);
    EXPECT_FALSE(compare("n", std::nan(""), 1.0, 1.0, Provenance::ClosedForm).passed);
}

ReportBundle solve_bundle() {
    auto c = parse_config(kMinimalSolve);
    c.expected.push_back({1, 1, -1.0, Provenance::ClosedForm});
    return run(c);
}

std::string render(const ReportBundle& b, ReportFormat f, EmitOptions opt = {}) {
    std::ostringstream os;
    write_report(b, f, os, opt);
    return os.str();
}

TEST(Report, JsonIsDeterministicAndSorted) {
    const std::string a = render(solve_bundle(), ReportFormat::Json);
    const std::string b = render(solve_bundle(), ReportFormat::Json);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.find("elapsed_seconds"), std::string::npos);
    EXPECT_LT(a.find("\"c_table\""), a.find("\"comparisons\""));
    EXPECT_LT(a.find("\"comparisons\""), a.find("\"config\""));
    EXPECT_LT(a.find("\"config\""), a.find("\"metadata\""));
    EXPECT_NE(a.find("\"re\": -1\n"), std::string::npos);
    EXPECT_NE(render(solve_bundle(), ReportFormat::Json, {true}).find("elapsed_seconds"), std::string::npos);
}

TEST(Report, CsvHasFixedHeader) {
    const std::string csv = render(solve_bundle(), ReportFormat::Csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "N,n,re,im");
    EXPECT_NE(csv.find("\n1,1,-1,0\n"), std::string::npos) << csv;
}

TEST(Report, HumanShowsProvenance) {
    const std::string h = render(solve_bundle(), ReportFormat::Human);
    EXPECT_NE(h.find("[closed-form]"), std::string::npos) << h;
    EXPECT_NE(h.find("PASS"), std::string::npos);
}

TEST(Report, EmitWritesSideTables) {
    auto c = default_config(Mode::Summation);
    const auto bundle = run(c);
    ASSERT_FALSE(bundle.tables.empty());
    const auto dir = std::filesystem::temp_directory_path() / "nlsdtn_emit_test";
    std::filesystem::create_directories(dir);
    const auto written = emit_report(bundle, ReportFormat::Csv, dir / "out.csv");
    EXPECT_EQ(written.size(), 1 + bundle.tables.size());
    for (const auto& p : written) EXPECT_TRUE(std::filesystem::exists(p)) << p;
    std::filesystem::remove_all(dir);
}

TEST(Run, FailedExpectationFailsBundle) {
    auto c = parse_config(kMinimalSolve);
    c.expected.push_back({1, 1, -2.0, Provenance::ClosedForm});
    EXPECT_FALSE(run(c).passed());
}

TEST(Run, ErrorsKeepTheirCategory) {
    auto c = parse_config(kMinimalSolve);
    c.tolerances.degree_cap = 2;
    c.problem->order_max = 7;
    try {
        run(c);
        FAIL() << "expected NumericalError";
    } catch (const Error& e) {
        EXPECT_EQ(e.category(), Error::Category::Numerical);
        EXPECT_NE(std::string(e.what()).find("run (mode solve)"), std::string::npos) << e.what();
    }
}

GradedCoefficients negative_exponential_table(int order_max) {
    ProblemSpec s = testing::single_mode(1.0, 1, -1, 1.0, order_max);
    return solve(s).neumann;
}

TEST(Summation, PartialSumAndPade) {
    const auto c = negative_exponential_table(7);
    EXPECT_EQ(sum_series(c, -1, 0.0, SummationMethod::Partial), cplx{});
    const double eps = 0.2;
    const cplx exact = I * eps * std::sqrt(1.0 - 2.0 * eps * eps);
    EXPECT_TRUE(complex_abs_near(sum_series(c, -1, eps, SummationMethod::Partial), exact, 2.0 * std::pow(eps, 9)));
    EXPECT_TRUE(complex_abs_near(sum_series(c, -1, eps, SummationMethod::Pade), exact, 1e-5));
    EXPECT_EQ(pade_order(7), 3);
    EXPECT_EQ(pade_order(12), 4);
    EXPECT_EQ(pade_order(1), 0);
}

// Property: the [m/m] approximant reproduces the series through order 2m, so
// its distance to the partial sum shrinks at least like eps^(2m+1).
TEST(Summation, PadeMatchesSeriesToOrder2m) {
    const auto c = negative_exponential_table(7);
    auto gap = [&](double eps) {
        return std::abs(sum_series(c, -1, eps, SummationMethod::Pade) - sum_series(c, -1, eps, SummationMethod::Partial));
    };
    const double slope = std::log2(gap(0.02) / gap(0.01));
    EXPECT_GE(slope, 2 * pade_order(7) + 1 - 0.2);
}

TEST(Summation, PadeNeedsEnoughOrders) {
    const auto c = negative_exponential_table(1);
    EXPECT_THROW(sum_series(c, -1, 0.1, SummationMethod::Pade), NumericalError);
}

TEST(Enums, SpellingsRoundTrip) {
    for (Mode m : {Mode::Solve, Mode::Verify, Mode::Linear, Mode::Summation, Mode::Floquet}) {
        EXPECT_EQ(parse_mode(to_string(m)), m);
    }
    for (ReportFormat f : {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Human}) {
        EXPECT_EQ(parse_format(to_string(f)), f);
    }
    EXPECT_THROW(parse_format("xml"), ConfigError);
}

}  // namespace
}  // namespace nlsdtn
