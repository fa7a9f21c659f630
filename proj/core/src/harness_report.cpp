#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "json_text.hpp"
#include "nlsdtn/harness.hpp"

#ifndef NLSDTN_VERSION
#define NLSDTN_VERSION "unknown"
#endif

namespace nlsdtn {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Comparison compare(std::string name, cplx value, cplx reference, double tolerance,
                   Provenance provenance, Criterion criterion) {
    Comparison c;
    c.name = std::move(name);
    c.value = value;
    c.reference = reference;
    c.abs_error = std::abs(value - reference);
    c.rel_error = std::abs(reference) > 0.0 ? c.abs_error / std::abs(reference) : c.abs_error;
    c.tolerance = tolerance;
    c.provenance = provenance;
    c.criterion = criterion;
    switch (criterion) {
        case Criterion::Relative:
            c.passed = std::isfinite(c.rel_error) && c.rel_error <= tolerance;
            break;
        case Criterion::Absolute:
            c.passed = std::isfinite(c.abs_error) && c.abs_error <= tolerance;
            break;
        case Criterion::Mixed: {
            const double err = c.abs_error / std::max(1.0, std::abs(reference));
            c.passed = std::isfinite(err) && err <= tolerance;
            break;
        }
        case Criterion::AtLeast:
            c.passed = std::isfinite(std::abs(value)) && std::abs(value) >= tolerance;
            break;
    }
    return c;
}

bool ReportBundle::passed() const {
    for (const auto& c : comparisons) {
        if (!c.passed) return false;
    }
    for (const auto& e : exponents) {
        if (!e.passed) return false;
    }
    return true;
}

namespace detail {

namespace {

void dump(const json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += inner + json(it.key()).dump() + ": ";
                dump(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line so tables remain readable.
            bool scalars = true;
            for (const auto& e : j) scalars = scalars && !e.is_structured();
            out += scalars ? "[" : "[\n";
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += scalars ? ", " : ",\n";
                first = false;
                if (!scalars) out += inner;
                dump(e, out, indent + 1);
            }
            out += scalars ? "]" : "\n" + pad + "]";
            return;
        }
        case json::value_t::number_float: {
            // -0 would come back from the parser as the integer 0.
            const double v = j.get<double>() + 0.0;
            out += std::isfinite(v) ? format_double(v) : "null";
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string dump_json(const json& j) {
    std::string out;
    dump(j, out, 0);
    return out;
}

}  // namespace detail

namespace {

json complex_json(cplx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

json report_json(const ReportBundle& b, const EmitOptions& opt) {
    json j;
    json rows = json::array();
    for (const auto& [key, v] : b.c_table) {
        rows.push_back({{"N", key.order}, {"n", key.harmonic}, {"re", v.real()}, {"im", v.imag()}});
    }
    j["c_table"] = rows;
    json comps = json::array();
    for (const auto& c : b.comparisons) {
        comps.push_back({{"name", c.name},
                         {"value", complex_json(c.value)},
                         {"reference", complex_json(c.reference)},
                         {"abs_error", c.abs_error},
                         {"rel_error", c.rel_error},
                         {"tolerance", c.tolerance},
                         {"criterion", to_string(c.criterion)},
                         {"provenance", to_string(c.provenance)},
                         {"passed", c.passed}});
    }
    j["comparisons"] = comps;
    json exps = json::array();
    for (const auto& e : b.exponents) {
        exps.push_back({{"name", e.name},
                        {"exponent", e.exponent},
                        {"expected", e.expected},
                        {"tolerance", e.tolerance},
                        {"passed", e.passed}});
    }
    j["exponents"] = exps;
    j["residuals"] = json::object();
    for (const auto& [k, v] : b.residuals) j["residuals"][k] = v;
    j["tables"] = json::object();
    for (const auto& [name, t] : b.tables) j["tables"][name] = {{"columns", t.columns}, {"rows", t.rows}};
    j["notes"] = b.notes;
    j["config"] = config_json(b.config);
    j["metadata"] = {{"mode", to_string(b.mode)}, {"passed", b.passed()}, {"version", NLSDTN_VERSION}};
    if (opt.include_timing) j["metadata"]["elapsed_seconds"] = b.elapsed_seconds;
    return j;
}

void write_csv_table(const DataTable& t, std::ostream& os) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i] + 0.0);
        os << "\n";
    }
}

std::string short_complex(cplx v) {
    // Adding 0.0 turns -0 into +0.
    v = {v.real() + 0.0, v.imag() + 0.0};
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.12g %c %.12gi", v.real(), v.imag() < 0 ? '-' : '+',
                  std::abs(v.imag()));
    return buf;
}

void write_human(const ReportBundle& b, std::ostream& os, const EmitOptions& opt) {
    char buf[256];
    os << "nlsdtn " << NLSDTN_VERSION << " | mode " << to_string(b.mode) << " | "
       << (b.passed() ? "PASS" : "FAIL") << "\n";
    if (opt.include_timing) {
        std::snprintf(buf, sizeof buf, "elapsed %.3f s\n", b.elapsed_seconds);
        os << buf;
    }
    if (!b.c_table.empty()) {
        os << "\nNeumann coefficients c[N,n]\n";
        for (const auto& [key, v] : b.c_table) {
            std::snprintf(buf, sizeof buf, "  c[%d,%d] = ", key.order, key.harmonic);
            os << buf << short_complex(v) << "\n";
        }
    }
    if (!b.residuals.empty()) {
        os << "\nResiduals\n";
        for (const auto& [k, v] : b.residuals) {
            std::snprintf(buf, sizeof buf, "  %-28s %.3e\n", k.c_str(), v);
            os << buf;
        }
    }
    if (!b.comparisons.empty()) {
        os << "\nComparisons\n";
        for (const auto& c : b.comparisons) {
            double shown = std::abs(c.value);
            const char* what = "level  ";
            switch (c.criterion) {
                case Criterion::Relative: shown = c.rel_error; what = "rel err"; break;
                case Criterion::Absolute: shown = c.abs_error; what = "abs err"; break;
                case Criterion::Mixed:
                    shown = c.abs_error / std::max(1.0, std::abs(c.reference));
                    what = "mix err";
                    break;
                case Criterion::AtLeast: break;
            }
            const char* bound = c.criterion == Criterion::AtLeast ? ">=" : "<=";
            std::snprintf(buf, sizeof buf, "  [%s] %-40s %s %.3e (%s %.1e) [%s]\n",
                          c.passed ? "pass" : "FAIL", c.name.c_str(), what, shown, bound,
                          c.tolerance, to_string(c.provenance).c_str());
            os << buf;
            os << "         value " << short_complex(c.value) << " | reference "
               << short_complex(c.reference) << "\n";
        }
    }
    if (!b.exponents.empty()) {
        os << "\nFitted exponents\n";
        for (const auto& e : b.exponents) {
            std::snprintf(buf, sizeof buf, "  [%s] %-36s %.4f (expected %.4f +- %.2f)\n",
                          e.passed ? "pass" : "FAIL", e.name.c_str(), e.exponent, e.expected,
                          e.tolerance);
            os << buf;
        }
    }
    for (const auto& [name, t] : b.tables) {
        os << "\nTable " << name << " (" << t.rows.size() << " rows)\n  ";
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? ", " : "") << t.columns[i];
        os << "\n";
    }
    if (!b.notes.empty()) {
        os << "\nNotes\n";
        for (const auto& n : b.notes) os << "  - " << n << "\n";
    }
}

}  // namespace

void write_report(const ReportBundle& bundle, ReportFormat format, std::ostream& os,
                  const EmitOptions& opt) {
    switch (format) {
        case ReportFormat::Json:
            os << detail::dump_json(report_json(bundle, opt)) << "\n";
            break;
        case ReportFormat::Csv: {
            DataTable t{{"N", "n", "re", "im"}, {}};
            for (const auto& [key, v] : bundle.c_table) {
                t.rows.push_back({static_cast<double>(key.order), static_cast<double>(key.harmonic),
                                  v.real(), v.imag()});
            }
            write_csv_table(t, os);
            break;
        }
        case ReportFormat::Human:
            write_human(bundle, os, opt);
            break;
    }
    if (!os) throw IoError("failed writing report");
}

std::vector<std::filesystem::path> emit_report(const ReportBundle& bundle, ReportFormat format,
                                               const std::filesystem::path& path,
                                               const EmitOptions& opt) {
    std::vector<std::filesystem::path> written;
    auto open = [&](const std::filesystem::path& p) {
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + p.string() + " for writing");
        return out;
    };
    {
        auto out = open(path);
        write_report(bundle, format, out, opt);
        out.flush();
        if (!out) throw IoError("failed writing " + path.string());
        written.push_back(path);
    }
    if (format == ReportFormat::Csv) {
        for (const auto& [name, t] : bundle.tables) {
            std::filesystem::path side = path;
            side.replace_filename(path.stem().string() + "." + name + ".csv");
            auto out = open(side);
            write_csv_table(t, out);
            out.flush();
            if (!out) throw IoError("failed writing " + side.string());
            written.push_back(side);
        }
    }
    return written;
}

}  // namespace nlsdtn
