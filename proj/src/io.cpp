#include "birkhoff/io.hpp"

#include <fmt/format.h>

#include <cmath>
#include <set>

namespace birkhoff::io {

using nlohmann::json;

json monomial_to_json(const Monomial& m)
{
    return json::array({m[0], m[1], m[2], m[3]});
}

json terms_to_json(const ComplexPolynomial& p)
{
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back({{"exponents", monomial_to_json(m)}, {"re", c.real()}, {"im", c.imag()}});
    }
    return terms;
}

json hamiltonian_to_json(const ComplexPolynomial& p, const Frequencies& freqs)
{
    return {{"dof", 2},
            {"chart", std::string(to_string(p.chart()))},
            {"frequencies", json::array({freqs.omega1, freqs.omega3})},
            {"terms", terms_to_json(p)}};
}

json hamiltonian_to_json(const GradedHamiltonian& h)
{
    return hamiltonian_to_json(h.total(), h.frequencies());
}

namespace {

const json& member(const json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw FormatError(fmt::format("missing key \"{}\"", key));
    }
    return *it;
}

double number(const json& v, const char* what)
{
    if (!v.is_number()) {
        throw FormatError(fmt::format("{} must be a number", what));
    }
    return v.get<double>();
}

Monomial exponents_from_json(const json& v)
{
    if (!v.is_array() || v.size() != 4) {
        throw FormatError("\"exponents\" must be an array of 4 integers");
    }
    std::array<int, 4> e{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!v[i].is_number_integer() || v[i].get<long long>() < 0 || v[i].get<long long>() > 64) {
            throw FormatError("exponents must be integers in 0..64");
        }
        e[i] = v[i].get<int>();
    }
    return {e[0], e[1], e[2], e[3]};
}

} // namespace

GradedHamiltonian hamiltonian_from_json(const json& doc)
{
    if (!doc.is_object()) {
        throw FormatError("Hamiltonian document must be a JSON object");
    }
    const json& dof = member(doc, "dof");
    if (!dof.is_number_integer() || dof.get<long long>() != 2) {
        throw FormatError("\"dof\" must be 2");
    }
    const json& chart_name = member(doc, "chart");
    if (!chart_name.is_string()) {
        throw FormatError("\"chart\" must be \"real\" or \"complex\"");
    }
    Chart chart{};
    try {
        chart = chart_from_string(chart_name.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    const json& f = member(doc, "frequencies");
    if (!f.is_array() || f.size() != 2) {
        throw FormatError("\"frequencies\" must be [omega1, omega3]");
    }
    const Frequencies freqs{number(f[0], "omega1"), number(f[1], "omega3")};

    const json& terms = member(doc, "terms");
    if (!terms.is_array()) {
        throw FormatError("\"terms\" must be an array");
    }
    ComplexPolynomial p(chart);
    std::set<Monomial> seen;
    for (const json& t : terms) {
        if (!t.is_object()) {
            throw FormatError("each term must be an object");
        }
        const Monomial m = exponents_from_json(member(t, "exponents"));
        if (!seen.insert(m).second) {
            throw FormatError("duplicate exponents " + to_string(m));
        }
        const double re = t.contains("re") ? number(t["re"], "\"re\"") : 0.0;
        const double im = t.contains("im") ? number(t["im"], "\"im\"") : 0.0;
        p.add_term(m, {re, im});
    }
    return GradedHamiltonian(p, freqs);
}

json report_to_json(const NormalFormReport& report)
{
    json resonances = json::array();
    for (const ResonanceFlag& r : report.resonance_flags) {
        resonances.push_back({{"exponents", monomial_to_json(r.exponents)}, {"divisor", r.divisor}});
    }
    const Frequencies& freqs = report.kamiltonian.frequencies();
    return {{"K2200", report.K2200},
            {"K1111", report.K1111},
            {"K0022", report.K0022},
            {"D2", report.D2},
            {"resonances", resonances},
            {"generating", hamiltonian_to_json(report.generating.total(), freqs)},
            {"kamiltonian", hamiltonian_to_json(report.kamiltonian)}};
}

} // namespace birkhoff::io
