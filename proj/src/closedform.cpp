#include "birkhoff/closedform.hpp"

#include "birkhoff/normalform.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cassert>
#include <cmath>

namespace birkhoff {

std::string_view resonance_name(Resonance r)
{
    switch (r) {
    case Resonance::vertical_twice_planar:
        return "omega3=2*omega1";
    case Resonance::planar_twice_vertical:
        return "omega1=2*omega3";
    case Resonance::planar_zero:
        return "omega1=0";
    case Resonance::vertical_zero:
        return "omega3=0";
    }
    return "unknown";
}

PoleError::PoleError(Resonance r)
    : std::domain_error(fmt::format("pole at resonance {}", resonance_name(r))), resonance_(r)
{
}

namespace {

void check_positive(const Frequencies& f)
{
    if (f.omega1 == 0.0) {
        throw PoleError(Resonance::planar_zero);
    }
    if (f.omega3 == 0.0) {
        throw PoleError(Resonance::vertical_zero);
    }
    if (!(f.omega1 > 0.0) || !(f.omega3 > 0.0)) {
        throw std::invalid_argument("frequencies must be positive");
    }
}

bool vanishes(double value, const Frequencies& f)
{
    return std::abs(value) <= kPoleTolerance * f.max();
}

void check_vertical_twice_planar(const Frequencies& f)
{
    if (vanishes(2 * f.omega1 - f.omega3, f)) {
        throw PoleError(Resonance::vertical_twice_planar);
    }
}

void check_planar_twice_vertical(const Frequencies& f)
{
    if (vanishes(f.omega1 - 2 * f.omega3, f)) {
        throw PoleError(Resonance::planar_twice_vertical);
    }
}

} // namespace

double k2200(const CubicQuarticCoefficients& c, const Frequencies& freqs)
{
    check_positive(freqs);
    check_vertical_twice_planar(freqs);
    const double w1 = freqs.omega1;
    const double w3 = freqs.omega3;
    const double num = (5 * c.a1 * c.a1 - 6 * c.b1 * w1) * w3 * (4 * w1 * w1 - w3 * w3) +
                       2 * c.a2 * c.a2 * w1 * (4 * w1 * w1 + w1 * w3 - w3 * w3);
    return num / (16 * w1 * w1 * w1 * w3 - 4 * w1 * w3 * w3 * w3);
}

double k1111(const CubicQuarticCoefficients& c, const Frequencies& freqs)
{
    check_positive(freqs);
    check_vertical_twice_planar(freqs);
    check_planar_twice_vertical(freqs);
    const double w1 = freqs.omega1;
    const double w3 = freqs.omega3;
    const double a2sq = c.a2 * c.a2;
    const double a3sq = c.a3 * c.a3;
    return (-8 * c.b3 + 12 * c.a1 * c.a3 / w1 + a3sq / (w1 - 2 * w3) + a2sq / (2 * w1 - w3) +
            6 * c.a2 * c.a4 / w3 + a2sq / (2 * w1 + w3) + a3sq / (w1 + 2 * w3)) /
           8;
}

double k0022(const CubicQuarticCoefficients& c, const Frequencies& freqs)
{
    check_positive(freqs);
    check_planar_twice_vertical(freqs);
    const double w1 = freqs.omega1;
    const double w3 = freqs.omega3;
    return (-12 * c.b5 + 10 * c.a4 * c.a4 / w3 +
            c.a3 * c.a3 * (4 / w1 + 2 * w1 / (w1 * w1 - 4 * w3 * w3))) /
           8;
}

double d2_expanded_unchecked(const CubicQuarticCoefficients& c, const Frequencies& freqs)
{
    const double w1 = freqs.omega1;
    const double w3 = freqs.omega3;
    const double w1sq = w1 * w1;
    const double w3sq = w3 * w3;
    return (-3 * c.a2 * c.a4 * w1 + 6 * c.b5 * w1sq - 5 * c.a4 * c.a4 * w1sq / w3 -
            6 * c.a1 * c.a3 * w3 + 4 * c.b3 * w1 * w3 + 6 * c.b1 * w3sq -
            5 * c.a1 * c.a1 * w3sq / w1 -
            c.a3 * c.a3 * w1 * (3 * w1sq + w1 * w3 - 8 * w3sq) / (w1sq - 4 * w3sq) +
            2 * c.a2 * c.a2 * w3 * (5 * w1sq + w1 * w3 - w3sq) / (-4 * w1sq + w3sq)) /
           4;
}

double d2_expanded(const CubicQuarticCoefficients& c, const Frequencies& freqs)
{
    check_positive(freqs);
    check_vertical_twice_planar(freqs);
    check_planar_twice_vertical(freqs);
    return d2_expanded_unchecked(c, freqs);
}

double d2_closed(const CubicQuarticCoefficients& c, const Frequencies& freqs)
{
    const double k1 = k2200(c, freqs);
    const double k2 = k1111(c, freqs);
    const double k3 = k0022(c, freqs);
    const double d2 = d2_from_k(k1, k2, k3, freqs);
#ifndef NDEBUG
    const double w1 = freqs.omega1;
    const double w3 = freqs.omega3;
    const double size = std::abs(k1) * w3 * w3 + std::abs(k2) * w1 * w3 + std::abs(k3) * w1 * w1;
    assert(std::abs(d2 - d2_expanded_unchecked(c, freqs)) <= 1e-9 * std::max(1.0, size));
#endif
    return d2;
}

} // namespace birkhoff
