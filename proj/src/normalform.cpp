#include "birkhoff/normalform.hpp"

#include <fmt/format.h>

#include <cmath>

namespace birkhoff {

ResonanceError::ResonanceError(const Monomial& exponents, double divisor)
    : std::runtime_error(fmt::format("resonant small divisor {:.3e} for monomial {}", divisor,
                                     to_string(exponents))),
      exponents_(exponents), divisor_(divisor)
{
}

double homological_divisor(const Monomial& m, const Frequencies& freqs)
{
    return freqs.omega1 * (m[1] - m[0]) + freqs.omega3 * (m[3] - m[2]);
}

double default_divisor_tolerance(const Frequencies& freqs)
{
    return 1e-9 * freqs.max();
}

std::complex<double> solve_homological_term(std::complex<double> coefficient, const Monomial& m,
                                            const Frequencies& freqs, double divisor_tolerance)
{
    if (divisor_tolerance < 0.0) {
        divisor_tolerance = default_divisor_tolerance(freqs);
    }
    const double divisor = homological_divisor(m, freqs);
    if (m.resonant() || std::abs(divisor) < divisor_tolerance) {
        throw ResonanceError(m, divisor);
    }
    return std::complex<double>(0.0, 1.0) * coefficient / divisor;
}

ComplexPolynomial GeneratingFunction::total() const
{
    ComplexPolynomial out(Chart::complex);
    for (const auto& [n, p] : parts) {
        for (const auto& [m, c] : p.terms()) {
            out.add_term(m, c);
        }
    }
    return out;
}

namespace {

double factorial(int n)
{
    double f = 1.0;
    for (int k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

double binomial(int n, int k)
{
    return factorial(n) / (factorial(k) * factorial(n - k));
}

using Triangle = std::vector<std::vector<ComplexPolynomial>>;

// Deprit triangle with H(e) = sum e^n/n! H_n and W(e) = sum e^n/n! W_{n+1}:
//   H_n^(k) = H_{n+1}^(k-1) + sum_{m=0}^{n} C(n,m) {H_{n-m}^(k-1), W_{m+1}}
// rows[k][n] = H_n^(k) for k + n <= depth; w[m] = W_m (w[0] unused).
Triangle lie_triangle(const std::vector<ComplexPolynomial>& h, const std::vector<ComplexPolynomial>& w,
                      int depth)
{
    Triangle rows(static_cast<std::size_t>(depth) + 1);
    rows[0].assign(h.begin(), h.begin() + depth + 1);
    for (int k = 1; k <= depth; ++k) {
        const auto& prev = rows[static_cast<std::size_t>(k - 1)];
        auto& row = rows[static_cast<std::size_t>(k)];
        for (int n = 0; n + k <= depth; ++n) {
            ComplexPolynomial acc = prev[static_cast<std::size_t>(n + 1)];
            for (int m = 0; m <= n; ++m) {
                const auto& gen = w[static_cast<std::size_t>(m + 1)];
                if (gen.empty()) {
                    continue;
                }
                auto term = poisson_bracket(prev[static_cast<std::size_t>(n - m)], gen);
                acc = add(acc, scale(term, std::complex<double>(binomial(n, m), 0.0)));
            }
            row.push_back(std::move(acc));
        }
    }
    return rows;
}

} // namespace

NormalFormReport normalize(const GradedHamiltonian& h, const NormalizeOptions& options)
{
    if (h.chart() != Chart::complex) {
        throw ChartMismatch("normalize expects the complex (diagonal) chart");
    }
    if (options.order != 2) {
        throw std::invalid_argument("normalization is capped at order 2 (degree 4)");
    }
    const Frequencies& freqs = h.frequencies();
    const double hard_tol =
        options.divisor_tolerance < 0.0 ? default_divisor_tolerance(freqs) : options.divisor_tolerance;
    const double warn_tol = options.small_divisor_warning * freqs.max();
    const int depth = options.order;

    std::vector<ComplexPolynomial> hs;
    for (int n = 0; n <= depth; ++n) {
        hs.push_back(scale(h.part(n + 2), std::complex<double>(factorial(n), 0.0)));
    }
    std::vector<ComplexPolynomial> ws(static_cast<std::size_t>(depth) + 1,
                                      ComplexPolynomial(Chart::complex));
    std::vector<ComplexPolynomial> ks(static_cast<std::size_t>(depth) + 1,
                                      ComplexPolynomial(Chart::complex));

    NormalFormReport report{.kamiltonian = h};
    for (int k = 1; k <= depth; ++k) {
        // With W_k unset, H_0^(k) holds every known contribution; W_k then
        // enters only through {H_0, W_k}, which removes the non-resonant part.
        const Triangle tri = lie_triangle(hs, ws, k);
        const ComplexPolynomial& known = tri[static_cast<std::size_t>(k)][0];
        ComplexPolynomial resonant(Chart::complex);
        ComplexPolynomial generator(Chart::complex);
        for (const auto& [m, c] : known.terms()) {
            if (m.resonant()) {
                resonant.add_term(m, c);
                continue;
            }
            const double divisor = homological_divisor(m, freqs);
            if (std::abs(divisor) < hard_tol) {
                throw ResonanceError(m, divisor);
            }
            if (std::abs(divisor) < warn_tol) {
                report.resonance_flags.push_back({m, divisor});
            }
            generator.add_term(m, solve_homological_term(c, m, freqs, hard_tol));
        }
        ks[static_cast<std::size_t>(k)] = std::move(resonant);
        ws[static_cast<std::size_t>(k)] = std::move(generator);
    }

    ComplexPolynomial normalized = h.part(2);
    for (int k = 1; k <= depth; ++k) {
        const std::complex<double> unscale(1.0 / factorial(k), 0.0);
        normalized = add(normalized, scale(ks[static_cast<std::size_t>(k)], unscale));
        report.generating.parts[k] = scale(ws[static_cast<std::size_t>(k)], unscale);
    }
    report.generating.parts.try_emplace(1, Chart::complex);
    report.kamiltonian = GradedHamiltonian(normalized, freqs);

    const ComplexPolynomial k4 = report.kamiltonian.part(4);
    const auto k2200 = k4.coefficient({2, 2, 0, 0});
    const auto k1111 = k4.coefficient({1, 1, 1, 1});
    const auto k0022 = k4.coefficient({0, 0, 2, 2});
    report.K2200 = k2200.real();
    report.K1111 = k1111.real();
    report.K0022 = k0022.real();
    report.k_imaginary = {k2200.imag(), k1111.imag(), k0022.imag()};
    report.D2 = d2_from_k(report.K2200, report.K1111, report.K0022, freqs);
    return report;
}

double d2_from_k(double k2200, double k1111, double k0022, const Frequencies& freqs)
{
    const double w1 = freqs.omega1;
    const double w3 = freqs.omega3;
    return -(k2200 * w3 * w3 + k1111 * w1 * w3 + k0022 * w1 * w1);
}

double frequency_shift_1dof(double omega, double a, double b)
{
    if (!(omega > 0.0)) {
        throw std::invalid_argument("frequency_shift_1dof: omega must be positive");
    }
    ComplexPolynomial h(Chart::real);
    h.add_term({3, 0, 0, 0}, a);
    h.add_term({4, 0, 0, 0}, b);
    const GradedHamiltonian real_h(h, {omega, omega});
    const NormalFormReport report = normalize(real_h.to_complex_chart());
    // J = i X1 Y1, so J^2 = -(X1 Y1)^2.
    return -report.K2200;
}

} // namespace birkhoff
