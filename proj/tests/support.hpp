#pragma once

// Shared generators and independent reference formulas for the test suites.

#include <complex>
#include <random>

#include "birkhoff/closedform.hpp"
#include "birkhoff/polyalg.hpp"

namespace birkhoff::testing {

inline Monomial random_monomial(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> var(0, 3);
    Monomial m;
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) {
        ++m.exponents[static_cast<std::size_t>(var(rng))];
    }
    return m;
}

/// Gaussian-rational polynomial with up to `max_terms` terms of degree <= max_degree.
inline ExactPolynomial random_exact(std::mt19937_64& rng, int max_degree, int max_terms = 6)
{
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    ExactPolynomial p(Chart::complex);
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
        mpq_class re(num(rng), den(rng));
        mpq_class im(num(rng), den(rng));
        re.canonicalize();
        im.canonicalize();
        p.add_term(random_monomial(rng, max_degree), GaussianRational(re, im));
    }
    return p;
}

/// Real-chart polynomial with real coefficients in [-1, 1].
inline ComplexPolynomial random_real(std::mt19937_64& rng, int max_degree, int max_terms = 6)
{
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    ComplexPolynomial p(Chart::real);
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
        p.add_term(random_monomial(rng, max_degree), coeff(rng));
    }
    return p;
}

inline CubicQuarticCoefficients random_coefficients(std::mt19937_64& rng, double bound = 2.0)
{
    std::uniform_real_distribution<double> u(-bound, bound);
    return {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

/// Frequencies in [lo, hi]^2 whose divisors 2w1 - w3, w1 - 2w3, w1 - w3,
/// 3w1 - w3, w1 - 3w3 all exceed `gap` in magnitude.
inline Frequencies random_nonresonant(std::mt19937_64& rng, double lo = 0.1, double hi = 5.0,
                                      double gap = 0.05)
{
    std::uniform_real_distribution<double> u(lo, hi);
    for (;;) {
        const double w1 = u(rng);
        const double w3 = u(rng);
        const double divisors[] = {2 * w1 - w3, w1 - 2 * w3, w1 - w3, 3 * w1 - w3, w1 - 3 * w3};
        bool ok = true;
        for (double d : divisors) {
            ok = ok && std::abs(d) > gap;
        }
        if (ok) {
            return {w1, w3};
        }
    }
}

inline double relative_error(double got, double want, double floor = 1.0)
{
    return std::abs(got - want) / std::max(std::abs(want), floor);
}

// Birkhoff coefficients of
//   H = (w1/2)(u^2+pu^2) + (w3/2)(v^2+pv^2) + a1 u^3 + a2 u^2 v + a3 u v^2 + a4 v^3
//       + b1 u^4 + b3 u^2 v^2 + b5 v^4
// in the complex chart (action I_k = i X_k Y_k), derived independently by
// averaging over the angles to second order. The K's here are the
// coefficients of (X1Y1)^2, X1Y1X2Y2, (X2Y2)^2, so the action-space
// coefficients are their negatives.
namespace standard {

inline double k2200(const CubicQuarticCoefficients& c, const Frequencies& f)
{
    const double w1 = f.omega1;
    const double w3 = f.omega3;
    return 15 * c.a1 * c.a1 / (4 * w1) + c.a2 * c.a2 / (2 * w3) +
           c.a2 * c.a2 / 8 * (1 / (2 * w1 + w3) - 1 / (2 * w1 - w3)) - 1.5 * c.b1;
}

inline double k1111(const CubicQuarticCoefficients& c, const Frequencies& f)
{
    const double w1 = f.omega1;
    const double w3 = f.omega3;
    return 3 * c.a3 * c.a1 / w1 + 3 * c.a4 * c.a2 / w3 - c.b3 +
           c.a3 * c.a3 / 2 * (1 / (w1 + 2 * w3) - 1 / (w1 - 2 * w3)) +
           c.a2 * c.a2 / 2 * (1 / (2 * w1 + w3) + 1 / (2 * w1 - w3));
}

inline double k0022(const CubicQuarticCoefficients& c, const Frequencies& f)
{
    const double w1 = f.omega1;
    const double w3 = f.omega3;
    return 15 * c.a4 * c.a4 / (4 * w3) + c.a3 * c.a3 / (2 * w1) +
           c.a3 * c.a3 / 8 * (1 / (w1 + 2 * w3) + 1 / (w1 - 2 * w3)) - 1.5 * c.b5;
}

} // namespace standard

} // namespace birkhoff::testing
