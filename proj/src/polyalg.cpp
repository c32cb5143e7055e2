#include "birkhoff/polyalg.hpp"

#include <fmt/format.h>

#include <vector>

namespace birkhoff {

std::string_view to_string(Chart chart)
{
    return chart == Chart::real ? "real" : "complex";
}

Chart chart_from_string(std::string_view name)
{
    if (name == "real") {
        return Chart::real;
    }
    if (name == "complex") {
        return Chart::complex;
    }
    throw std::invalid_argument(fmt::format("unknown chart '{}'", name));
}

std::string to_string(const Monomial& m)
{
    return fmt::format("[{},{},{},{}]", m[0], m[1], m[2], m[3]);
}

namespace {

using cd = std::complex<double>;

// Powers 0..max_power of the linear form a*U + b*V in the slots (u, v) of one mode.
std::vector<ComplexPolynomial> linear_form_powers(int u, int v, cd a, cd b, int max_power)
{
    Monomial mu;
    Monomial mv;
    mu.exponents[static_cast<std::size_t>(u)] = 1;
    mv.exponents[static_cast<std::size_t>(v)] = 1;
    ComplexPolynomial form(Chart::complex);
    form.add_term(mu, a);
    form.add_term(mv, b);

    std::vector<ComplexPolynomial> powers;
    powers.push_back(ComplexPolynomial::constant(Chart::complex, 1.0));
    for (int k = 1; k <= max_power; ++k) {
        powers.push_back(multiply(powers.back(), form));
    }
    return powers;
}

struct Substitution {
    // Images of the first and second variable of each canonical pair.
    cd first_a, first_b, second_a, second_b;
};

ComplexPolynomial substitute(const ComplexPolynomial& f, const Substitution& s, Chart target)
{
    const int n = std::max(f.max_degree(), 0);
    std::array<std::vector<ComplexPolynomial>, 4> powers{
        linear_form_powers(0, 1, s.first_a, s.first_b, n),
        linear_form_powers(0, 1, s.second_a, s.second_b, n),
        linear_form_powers(2, 3, s.first_a, s.first_b, n),
        linear_form_powers(2, 3, s.second_a, s.second_b, n),
    };

    ComplexPolynomial out(Chart::complex);
    double scale_seen = 0.0;
    for (const auto& [m, c] : f.terms()) {
        ComplexPolynomial image = ComplexPolynomial::constant(Chart::complex, c);
        for (std::size_t v = 0; v < 4; ++v) {
            if (m[v] > 0) {
                image = multiply(image, powers[v][static_cast<std::size_t>(m[v])]);
            }
        }
        for (const auto& [mi, ci] : image.terms()) {
            scale_seen = std::max(scale_seen, std::abs(ci));
            out.add_term(mi, ci);
        }
    }
    out.purge(scale_seen);

    ComplexPolynomial tagged(target);
    for (const auto& [m, c] : out.terms()) {
        tagged.add_term(m, c);
    }
    return tagged;
}

} // namespace

ComplexPolynomial complexify(const ComplexPolynomial& f)
{
    if (f.chart() != Chart::real) {
        throw ChartMismatch("complexify expects a real-chart polynomial");
    }
    const double r = 1.0 / std::sqrt(2.0);
    const cd i(0.0, 1.0);
    // q -> (X + iY)/sqrt2, p -> (iX + Y)/sqrt2
    return substitute(f, {r, i * r, i * r, r}, Chart::complex);
}

ComplexPolynomial realify(const ComplexPolynomial& f)
{
    if (f.chart() != Chart::complex) {
        throw ChartMismatch("realify expects a complex-chart polynomial");
    }
    const double r = 1.0 / std::sqrt(2.0);
    const cd i(0.0, 1.0);
    // X -> (q - ip)/sqrt2, Y -> (-iq + p)/sqrt2
    return substitute(f, {r, -i * r, -i * r, r}, Chart::real);
}

double max_abs_difference(const ComplexPolynomial& f, const ComplexPolynomial& g)
{
    detail::require_same_chart(f, g);
    double worst = 0.0;
    for (const auto& [m, c] : f.terms()) {
        worst = std::max(worst, std::abs(c - g.coefficient(m)));
    }
    for (const auto& [m, c] : g.terms()) {
        if (!f.terms().contains(m)) {
            worst = std::max(worst, std::abs(c));
        }
    }
    return worst;
}

ComplexPolynomial GradedHamiltonian::quadratic_part(Chart chart, Frequencies freqs)
{
    ComplexPolynomial h2(chart);
    if (chart == Chart::complex) {
        h2.add_term({1, 1, 0, 0}, {0.0, freqs.omega1});
        h2.add_term({0, 0, 1, 1}, {0.0, freqs.omega3});
    } else {
        h2.add_term({2, 0, 0, 0}, freqs.omega1 / 2);
        h2.add_term({0, 2, 0, 0}, freqs.omega1 / 2);
        h2.add_term({0, 0, 2, 0}, freqs.omega3 / 2);
        h2.add_term({0, 0, 0, 2}, freqs.omega3 / 2);
    }
    return h2;
}

GradedHamiltonian::GradedHamiltonian(const ComplexPolynomial& total, Frequencies freqs)
    : chart_(total.chart()), freqs_(freqs)
{
    if (!(freqs.omega1 > 0.0) || !(freqs.omega3 > 0.0) || !std::isfinite(freqs.omega1) ||
        !std::isfinite(freqs.omega3)) {
        throw InvalidHamiltonian("frequencies must be positive and finite");
    }
    for (const auto& [m, c] : total.terms()) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InvalidHamiltonian("non-finite coefficient at " + to_string(m));
        }
        const int d = m.degree();
        if (d == 1) {
            throw InvalidHamiltonian("linear terms present: origin is not an equilibrium");
        }
        if (d == 0) {
            continue; // additive constant, dynamically irrelevant
        }
        auto [it, inserted] = parts_.try_emplace(d, chart_);
        it->second.add_term(m, c);
    }

    const ComplexPolynomial expected = quadratic_part(chart_, freqs_);
    auto it = parts_.find(2);
    if (it == parts_.end()) {
        parts_.emplace(2, expected);
    } else if (max_abs_difference(it->second, expected) > 1e-9 * freqs_.max()) {
        throw InvalidHamiltonian(
            "quadratic part is not the diagonal oscillator pair fixed by the frequencies");
    } else {
        it->second = expected;
    }
}

ComplexPolynomial GradedHamiltonian::part(int degree) const
{
    auto it = parts_.find(degree);
    return it == parts_.end() ? ComplexPolynomial(chart_) : it->second;
}

ComplexPolynomial GradedHamiltonian::total() const
{
    ComplexPolynomial out(chart_);
    for (const auto& [d, p] : parts_) {
        for (const auto& [m, c] : p.terms()) {
            out.add_term(m, c);
        }
    }
    return out;
}

GradedHamiltonian GradedHamiltonian::to_complex_chart() const
{
    if (chart_ == Chart::complex) {
        return *this;
    }
    return GradedHamiltonian(complexify(total()), freqs_);
}

GradedHamiltonian GradedHamiltonian::to_real_chart() const
{
    if (chart_ == Chart::real) {
        return *this;
    }
    return GradedHamiltonian(realify(total()), freqs_);
}

} // namespace birkhoff
