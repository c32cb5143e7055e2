#pragma once

// Lie-transform (Deprit) reduction of a GradedHamiltonian to Birkhoff normal
// form through degree 4, and the Arnold determinant D2.

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "birkhoff/polyalg.hpp"

namespace birkhoff {

/// A non-resonant term whose small divisor is too close to zero to solve for.
class ResonanceError : public std::runtime_error {
public:
    ResonanceError(const Monomial& exponents, double divisor);

    const Monomial& exponents() const { return exponents_; }
    double divisor() const { return divisor_; }

private:
    Monomial exponents_;
    double divisor_;
};

/// omega1 (l - j) + omega3 (s - r)
double homological_divisor(const Monomial& m, const Frequencies& freqs);

/// 1e-9 * max(omega1, omega3)
double default_divisor_tolerance(const Frequencies& freqs);

/// Generating-function coefficient that cancels coefficient * m against the
/// quadratic part: i * coefficient / (omega1 (l - j) + omega3 (s - r)).
/// A negative tolerance selects default_divisor_tolerance.
std::complex<double> solve_homological_term(std::complex<double> coefficient, const Monomial& m,
                                            const Frequencies& freqs, double divisor_tolerance = -1.0);

struct GeneratingFunction {
    /// order n -> homogeneous part of degree n + 2. Each term equals
    /// i A / divisor for the term A it removed at that degree.
    std::map<int, ComplexPolynomial> parts;

    ComplexPolynomial total() const;
};

struct ResonanceFlag {
    Monomial exponents;
    double divisor = 0.0;
};

struct NormalizeOptions {
    /// Normalization order n (degree n + 2). Only 2 is supported.
    int order = 2;
    /// Hard limit; negative selects default_divisor_tolerance.
    double divisor_tolerance = -1.0;
    /// Solved terms whose |divisor| is below this fraction of max(omega) are flagged.
    double small_divisor_warning = 1e-2;
};

struct NormalFormReport {
    double K2200 = 0.0;
    double K1111 = 0.0;
    double K0022 = 0.0;
    double D2 = 0.0;
    /// Imaginary parts of (K2200, K1111, K0022); vanish for real Hamiltonians.
    std::array<double, 3> k_imaginary{};
    std::vector<ResonanceFlag> resonance_flags{};
    GeneratingFunction generating{};
    /// Normalized Hamiltonian: degree 3 empty, degree 4 only (X1Y1)^a (X2Y2)^b terms.
    GradedHamiltonian kamiltonian;
};

NormalFormReport normalize(const GradedHamiltonian& h, const NormalizeOptions& options = {});

/// D2 = -(K2200 omega3^2 + K1111 omega1 omega3 + K0022 omega1^2)
double d2_from_k(double k2200, double k1111, double k0022, const Frequencies& freqs);

/// Coefficient c2 of J^2 in the one-mode normal form of
/// (omega/2)(q^2 + p^2) + a q^3 + b q^4; the orbital frequency at action J is
/// omega + 2 c2 J + O(J^2). Computed by the engine with the second mode uncoupled.
double frequency_shift_1dof(double omega, double a, double b);

} // namespace birkhoff
