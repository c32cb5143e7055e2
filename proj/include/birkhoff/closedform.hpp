#pragma once

// Closed-form degree-4 normal-form coefficients of the cubic/quartic model
// in terms of (a1..a4, b1, b3, b5) and the frequencies, and the resulting D2.

#include <stdexcept>
#include <string_view>

#include "birkhoff/polyalg.hpp"

namespace birkhoff {

struct CubicQuarticCoefficients {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
    double b1 = 0.0;
    double b3 = 0.0;
    double b5 = 0.0;
};

enum class Resonance {
    vertical_twice_planar, // omega3 = 2 omega1
    planar_twice_vertical, // omega1 = 2 omega3
    planar_zero,           // omega1 = 0
    vertical_zero,         // omega3 = 0
};

std::string_view resonance_name(Resonance r);

class PoleError : public std::domain_error {
public:
    explicit PoleError(Resonance r);
    Resonance resonance() const { return resonance_; }

private:
    Resonance resonance_;
};

/// Relative width used to decide that a denominator vanishes.
inline constexpr double kPoleTolerance = 1e-12;

double k2200(const CubicQuarticCoefficients& c, const Frequencies& freqs);
double k1111(const CubicQuarticCoefficients& c, const Frequencies& freqs);
double k0022(const CubicQuarticCoefficients& c, const Frequencies& freqs);

/// -(k2200 omega3^2 + k1111 omega1 omega3 + k0022 omega1^2). Debug builds
/// cross-check against d2_expanded.
double d2_closed(const CubicQuarticCoefficients& c, const Frequencies& freqs);

/// The same D2 written out as a single rational expression in the coefficients.
double d2_expanded(const CubicQuarticCoefficients& c, const Frequencies& freqs);

/// d2_expanded without pole checks; may return huge or non-finite values.
double d2_expanded_unchecked(const CubicQuarticCoefficients& c, const Frequencies& freqs);

} // namespace birkhoff
