#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "birkhoff/closedform.hpp"
#include "birkhoff/io.hpp"
#include "birkhoff/normalform.hpp"
#include "birkhoff/rtbpmodel.hpp"

namespace birkhoff::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Grid {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;
};

Grid parse_grid(const std::string& text)
{
    Grid g;
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
        throw UsageError("--grid must be lo:hi:steps");
    }
    try {
        std::size_t used = 0;
        const std::string lo = text.substr(0, first);
        const std::string hi = text.substr(first + 1, second - first - 1);
        const std::string steps = text.substr(second + 1);
        g.lo = std::stod(lo, &used);
        if (used != lo.size()) {
            throw std::invalid_argument(lo);
        }
        g.hi = std::stod(hi, &used);
        if (used != hi.size()) {
            throw std::invalid_argument(hi);
        }
        g.steps = std::stoi(steps, &used);
        if (used != steps.size()) {
            throw std::invalid_argument(steps);
        }
    } catch (const std::logic_error&) {
        throw UsageError(fmt::format("cannot parse --grid \"{}\"", text));
    }
    if (!(g.lo > 0.0) || !(g.hi > g.lo) || !std::isfinite(g.hi)) {
        throw UsageError("--grid needs 0 < lo < hi");
    }
    if (g.steps < 2) {
        throw UsageError("--grid needs steps >= 2");
    }
    return g;
}

struct ModelFlags {
    rtbp::ModelParams params{.mu = 0.00025, .q = 0.025, .Q = 0.00025, .A = 0.00025};
    double omega3 = 1.0;
    std::optional<double> d2_tolerance;
};

void add_model_flags(CLI::App* cmd, ModelFlags& m)
{
    cmd->add_option("--mu", m.params.mu, "mass ratio in (0, 1)")->capture_default_str();
    cmd->add_option("--q", m.params.q, "radiation factor of the bigger primary")->capture_default_str();
    cmd->add_option("--Q", m.params.Q, "radiation factor of the smaller primary")->capture_default_str();
    cmd->add_option("--A", m.params.A, "oblateness of the smaller primary")->capture_default_str();
    cmd->add_option("--omega3", m.omega3, "vertical frequency")->capture_default_str();
    cmd->add_option("--d2-tolerance", m.d2_tolerance,
                    "absolute |D2| threshold (default: 1e-6 * median |D2| on the 0.05:0.95:181 grid)");
}

json params_json(const rtbp::ModelParams& p)
{
    return {{"mu", p.mu}, {"q", p.q}, {"Q", p.Q}, {"A", p.A}};
}

json coefficients_json(const rtbp::CoefficientSet& c)
{
    json out = json::object();
    for (std::size_t s = 0; s < rtbp::kSeriesCount; ++s) {
        const auto series = static_cast<rtbp::Series>(s);
        out[std::string(rtbp::series_name(series))] = c.get(series);
    }
    return out;
}

json verdict_json(const rtbp::StabilityVerdict& v)
{
    return {{"status", std::string(rtbp::status_name(v.status))},
            {"D2", v.D2},
            {"omega1", v.omega1},
            {"omega3", v.omega3},
            {"d2_tolerance", v.d2_tolerance},
            {"notes", v.notes}};
}

std::string csv_number(double x)
{
    return fmt::format("{:.16e}", x);
}

// Output sink: --output path or the caller's stream. Content is assembled
// first so a failed computation never leaves a partial file behind.
void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError(fmt::format("cannot open output file \"{}\"", path));
    }
    file << text;
    if (!file.flush()) {
        throw IoError(fmt::format("failed writing \"{}\"", path));
    }
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

json read_json_input(const std::string& path)
{
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) {
            throw UsageError(fmt::format("cannot open input file \"{}\"", path));
        }
        buffer << file.rdbuf();
    }
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw io::FormatError(fmt::format("invalid JSON in \"{}\": {}", path, e.what()));
    }
}

void write_error(std::ostream& err, const char* kind, const std::string& message, json extra = json::object())
{
    extra["error"] = kind;
    extra["message"] = message;
    err << extra.dump() << "\n";
}

struct NormalizeFlags {
    std::string input;
    std::string output;
    double divisor_tolerance = -1.0;
};

std::string run_normalize(const NormalizeFlags& f)
{
    const GradedHamiltonian h = io::hamiltonian_from_json(read_json_input(f.input));
    NormalizeOptions options;
    options.divisor_tolerance = f.divisor_tolerance;
    const NormalFormReport report = normalize(h.to_complex_chart(), options);
    return dump(io::report_to_json(report));
}

struct ClosedFormFlags {
    CubicQuarticCoefficients c;
    double omega1 = 1.0;
    double omega3 = 1.0;
    std::string output;
};

std::string run_closed_form(const ClosedFormFlags& f)
{
    const Frequencies freqs{f.omega1, f.omega3};
    json out = {{"K2200", k2200(f.c, freqs)},
                {"K1111", k1111(f.c, freqs)},
                {"K0022", k0022(f.c, freqs)},
                {"D2", d2_closed(f.c, freqs)},
                {"D2_expanded", d2_expanded(f.c, freqs)}};
    return dump(out);
}

struct EvalFlags {
    ModelFlags model;
    double omega1 = 0.3;
    bool trace = false;
    std::string output;
};

std::string run_eval(const EvalFlags& f)
{
    const rtbp::ModelParams& p = f.model.params;
    const rtbp::CoefficientSet c = rtbp::coefficients(p);
    const double tol = f.model.d2_tolerance ? *f.model.d2_tolerance
                                            : rtbp::default_d2_tolerance(p, f.model.omega3);
    const rtbp::StabilityVerdict v = rtbp::stability_verdict(c, f.omega1, f.model.omega3, tol);
    json out = {{"params", params_json(p)},
                {"supported_range", p.within_supported_range()},
                {"coefficients", coefficients_json(c)},
                {"verdict", verdict_json(v)}};
    if (f.trace) {
        json rows = json::array();
        for (const rtbp::TermContribution& t : rtbp::trace_series(p)) {
            rows.push_back({{"series", std::string(rtbp::series_name(t.series))},
                            {"half_power", t.half_power},
                            {"block", t.block},
                            {"term", t.term},
                            {"value", t.value}});
        }
        out["trace"] = rows;
    }
    return dump(out);
}

struct ScanFlags {
    ModelFlags model;
    std::string grid;
    std::string format = "csv";
    std::string output;
};

std::string run_scan(const ScanFlags& f)
{
    const Grid g = parse_grid(f.grid);
    const rtbp::ModelParams& p = f.model.params;
    rtbp::ScanOptions options;
    options.d2_tolerance = f.model.d2_tolerance;
    const rtbp::Scan scan = rtbp::scan_omega1(p, f.model.omega3, g.lo, g.hi, g.steps, options);

    if (f.format == "csv") {
        std::string text = "omega1,D2,flag\n";
        for (const rtbp::ScanRow& row : scan.rows) {
            text += fmt::format("{},{},{}\n", csv_number(row.omega1), csv_number(row.D2),
                                rtbp::flag_name(row.flag));
        }
        return text;
    }
    json rows = json::array();
    for (const rtbp::ScanRow& row : scan.rows) {
        json notes = json::array();
        for (const rtbp::PoleFlag& pf : row.poles) {
            notes.push_back(fmt::format("pole {} (divisor {:.6e})", resonance_name(pf.resonance), pf.divisor));
        }
        rows.push_back({{"status", std::string(rtbp::flag_name(row.flag))},
                        {"D2", row.D2},
                        {"omega1", row.omega1},
                        {"omega3", f.model.omega3},
                        {"notes", notes}});
    }
    return dump({{"params", params_json(p)},
                 {"supported_range", p.within_supported_range()},
                 {"d2_tolerance", scan.d2_tolerance},
                 {"rows", rows}});
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Birkhoff normal forms, the Arnold determinant D2 and the oblate photogravitational RTBP",
                 "birkhoff-d2"};
    app.require_subcommand(1, 1);

    NormalizeFlags nf;
    auto* normalize_cmd = app.add_subcommand("normalize", "normalize a Hamiltonian JSON to degree 4");
    normalize_cmd->add_option("--input,-i", nf.input, "Hamiltonian JSON file, - for stdin")->required();
    normalize_cmd->add_option("--divisor-tolerance", nf.divisor_tolerance,
                              "hard small-divisor limit (default 1e-9 * max omega)");
    normalize_cmd->add_option("--output,-o", nf.output, "output file (default stdout)");

    ClosedFormFlags cf;
    auto* closed_cmd = app.add_subcommand("closed-form", "K2200, K1111, K0022 and D2 from a1..a4, b1, b3, b5");
    closed_cmd->add_option("--a1", cf.c.a1);
    closed_cmd->add_option("--a2", cf.c.a2);
    closed_cmd->add_option("--a3", cf.c.a3);
    closed_cmd->add_option("--a4", cf.c.a4);
    closed_cmd->add_option("--b1", cf.c.b1);
    closed_cmd->add_option("--b3", cf.c.b3);
    closed_cmd->add_option("--b5", cf.c.b5);
    closed_cmd->add_option("--omega1", cf.omega1)->required();
    closed_cmd->add_option("--omega3", cf.omega3)->capture_default_str();
    closed_cmd->add_option("--output,-o", cf.output, "output file (default stdout)");

    EvalFlags ef;
    auto* eval_cmd = app.add_subcommand("rtbp-eval", "coefficient series and stability verdict at one point");
    add_model_flags(eval_cmd, ef.model);
    eval_cmd->add_option("--omega1", ef.omega1, "planar frequency")->required();
    eval_cmd->add_flag("--trace", ef.trace, "list every transcribed series term");
    eval_cmd->add_option("--output,-o", ef.output, "output file (default stdout)");

    ScanFlags sf;
    auto* scan_cmd = app.add_subcommand("rtbp-scan", "D2 over a uniform omega1 grid");
    add_model_flags(scan_cmd, sf.model);
    scan_cmd->get_option("--d2-tolerance")
        ->description("absolute |D2| threshold (default: 1e-6 * median |D2| over the non-pole rows of this grid)");
    scan_cmd->add_option("--grid", sf.grid, "lo:hi:steps, endpoints included")->required();
    scan_cmd->add_option("--format", sf.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    scan_cmd->add_option("--output,-o", sf.output, "output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        write_error(err, "usage", e.what());
        return kUsage;
    }

    try {
        if (normalize_cmd->parsed()) {
            emit(run_normalize(nf), nf.output, out);
        } else if (closed_cmd->parsed()) {
            emit(run_closed_form(cf), cf.output, out);
        } else if (eval_cmd->parsed()) {
            emit(run_eval(ef), ef.output, out);
        } else {
            emit(run_scan(sf), sf.output, out);
        }
        return kOk;
    } catch (const UsageError& e) {
        write_error(err, "usage", e.what());
        return kUsage;
    } catch (const io::FormatError& e) {
        write_error(err, "usage", e.what());
        return kUsage;
    } catch (const IoError& e) {
        write_error(err, "io", e.what());
        return kIoFailure;
    } catch (const ResonanceError& e) {
        write_error(err, "resonance", e.what(),
                    {{"exponents", io::monomial_to_json(e.exponents())}, {"divisor", e.divisor()}});
        return kResonance;
    } catch (const PoleError& e) {
        write_error(err, "domain", e.what(), {{"resonance", std::string(resonance_name(e.resonance()))}});
        return kDomain;
    } catch (const std::domain_error& e) {
        write_error(err, "domain", e.what());
        return kDomain;
    } catch (const std::invalid_argument& e) {
        write_error(err, "domain", e.what());
        return kDomain;
    }
}

} // namespace birkhoff::cli
