#pragma once

// JSON forms of Hamiltonians and normal-form reports.
//
// Hamiltonian: {"dof": 2, "chart": "real"|"complex", "frequencies": [w1, w3],
//               "terms": [{"exponents": [j, l, r, s], "re": x, "im": y}, ...]}
// Terms are written in graded-lexicographic order.

#include <stdexcept>

#include <json.hpp>

#include "birkhoff/normalform.hpp"
#include "birkhoff/polyalg.hpp"

namespace birkhoff::io {

/// Structurally malformed document (missing keys, wrong types, duplicates).
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

nlohmann::json terms_to_json(const ComplexPolynomial& p);
nlohmann::json hamiltonian_to_json(const ComplexPolynomial& p, const Frequencies& freqs);
nlohmann::json hamiltonian_to_json(const GradedHamiltonian& h);

/// Throws FormatError for malformed documents and InvalidHamiltonian for
/// well-formed ones that violate the Hamiltonian invariants.
GradedHamiltonian hamiltonian_from_json(const nlohmann::json& doc);

nlohmann::json monomial_to_json(const Monomial& m);

/// {"K2200", "K1111", "K0022", "D2", "resonances", "generating", "kamiltonian"}
nlohmann::json report_to_json(const NormalFormReport& report);

} // namespace birkhoff::io
