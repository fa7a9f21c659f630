// nlsdtn: command line front end.
//
// Exit codes: 0 all comparisons pass, 1 a comparison failed,
// 2 usage or configuration error, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlsdtn/harness.hpp"

namespace {

enum ExitCode { kPass = 0, kComparisonFailed = 1, kUsage = 2, kNumerical = 3 };

struct Overrides {
    std::string config_path;
    std::string format = "human";
    std::string output;
    std::optional<double> omega;
    std::optional<int> lambda;
    std::optional<int> order_max;
    std::vector<std::string> coefficients;
    bool timing = false;
    bool echo_config = false;
};

nlsdtn::CoefficientEntry parse_coefficient(const std::string& text) {
    // N,n,re[,im]
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
    if (parts.size() != 3 && parts.size() != 4) {
        throw nlsdtn::ConfigError("--coef \"" + text + "\": expected N,n,re[,im]");
    }
    try {
        nlsdtn::CoefficientEntry e;
        e.order = std::stoi(parts[0]);
        e.harmonic = std::stoi(parts[1]);
        e.value = {std::stod(parts[2]), parts.size() == 4 ? std::stod(parts[3]) : 0.0};
        return e;
    } catch (const std::exception&) {
        throw nlsdtn::ConfigError("--coef \"" + text + "\": not a number");
    }
}

nlsdtn::RunConfig build_config(nlsdtn::Mode mode, const Overrides& o) {
    nlsdtn::RunConfig c =
        o.config_path.empty() ? nlsdtn::default_config(mode) : nlsdtn::load_config(o.config_path);
    if (c.mode != mode) {
        throw nlsdtn::ConfigError("config mode \"" + nlsdtn::to_string(c.mode) +
                                  "\" does not match subcommand \"" + nlsdtn::to_string(mode) + "\"");
    }
    const bool touches_problem = o.omega || o.lambda || o.order_max || !o.coefficients.empty();
    if (touches_problem && !c.problem) c.problem = nlsdtn::ProblemConfig{};
    if (o.omega) c.problem->omega = *o.omega;
    if (o.lambda) c.problem->lambda = *o.lambda;
    if (o.order_max) c.problem->order_max = *o.order_max;
    if (!o.coefficients.empty()) {
        c.problem->dirichlet.clear();
        for (const auto& t : o.coefficients) c.problem->dirichlet.push_back(parse_coefficient(t));
    }
    c.validate();
    return c;
}

int execute(nlsdtn::Mode mode, const Overrides& o) {
    try {
        const nlsdtn::ReportFormat format = nlsdtn::parse_format(o.format);
        const nlsdtn::RunConfig config = build_config(mode, o);
        if (o.echo_config) {
            std::cout << nlsdtn::config_to_json(config);
            return kPass;
        }
        const nlsdtn::ReportBundle bundle = nlsdtn::run(config);
        const nlsdtn::EmitOptions emit{o.timing};
        if (o.output.empty()) {
            nlsdtn::write_report(bundle, format, std::cout, emit);
        } else {
            for (const auto& p : nlsdtn::emit_report(bundle, format, o.output, emit)) {
                std::cerr << "wrote " << p.string() << "\n";
            }
        }
        return bundle.passed() ? kPass : kComparisonFailed;
    } catch (const nlsdtn::Error& e) {
        std::cerr << "nlsdtn: " << e.what() << "\n";
        return e.category() == nlsdtn::Error::Category::Numerical ? kNumerical : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "nlsdtn: unexpected failure: " << e.what() << "\n";
        return kNumerical;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perturbative Dirichlet-to-Neumann map for the NLS equation on the half-line"};
    app.require_subcommand(1);
    app.set_version_flag("--version", NLSDTN_CLI_VERSION);

    struct Sub {
        nlsdtn::Mode mode;
        const char* help;
    };
    const Sub subs[] = {
        {nlsdtn::Mode::Solve, "Solve the coefficient hierarchy for the given Dirichlet data"},
        {nlsdtn::Mode::Verify, "Run the reference comparisons against published and closed-form values"},
        {nlsdtn::Mode::Linear, "Linear half-line checks: DtN coefficients, contour identity, decay rates"},
        {nlsdtn::Mode::Summation, "Partial sums or Pade approximants of the Neumann series"},
        {nlsdtn::Mode::Floquet, "Monodromy of the background t-part and its discriminant"},
    };

    Overrides o;
    std::optional<nlsdtn::Mode> chosen;
    for (const auto& s : subs) {
        CLI::App* sc = app.add_subcommand(nlsdtn::to_string(s.mode), s.help);
        sc->add_option("config", o.config_path, "JSON config (defaults to the built-in reference case)")
            ->check(CLI::ExistingFile);
        sc->add_option("-f,--format", o.format, "Report format")
            ->check(CLI::IsMember({"json", "csv", "human"}));
        sc->add_option("-o,--output", o.output, "Write the report here instead of stdout");
        sc->add_option("--omega", o.omega, "Override problem.omega");
        sc->add_option("--lambda", o.lambda, "Override problem.lambda")->check(CLI::IsMember({-1, 1}));
        sc->add_option("--order-max", o.order_max, "Override problem.order_max");
        sc->add_option("--coef", o.coefficients, "Replace problem.dirichlet; repeatable N,n,re[,im]");
        sc->add_flag("--timing", o.timing, "Include wall-clock time in the report");
        sc->add_flag("--echo-config", o.echo_config, "Print the effective config and exit");
        sc->callback([&chosen, mode = s.mode] { chosen = mode; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    return execute(*chosen, o);
}
