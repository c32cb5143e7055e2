#pragma once

// Sparse polynomials in two canonical pairs (X1, Y1, X2, Y2), with Poisson
// bracket, grading and the real <-> complex change of canonical chart.

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <complex>
#include <concepts>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include <gmpxx.h>

namespace birkhoff {

enum class Chart { real, complex };

std::string_view to_string(Chart chart);
Chart chart_from_string(std::string_view name);

/// Exponents (j, l, r, s) of X1^j Y1^l X2^r Y2^s, or of q1^j p1^l q2^r p2^s
/// in the real chart. Ordered graded-lexicographically on (degree, j, l, r, s).
struct Monomial {
    std::array<int, 4> exponents{};

    constexpr Monomial() = default;
    constexpr Monomial(int j, int l, int r, int s) : exponents{j, l, r, s}
    {
        for (int e : exponents) {
            if (e < 0) {
                throw std::invalid_argument("monomial exponents must be non-negative");
            }
        }
    }

    constexpr int degree() const
    {
        return exponents[0] + exponents[1] + exponents[2] + exponents[3];
    }

    constexpr int operator[](std::size_t i) const { return exponents[i]; }

    /// j == l and r == s: a pure product of actions, cannot be normalized away.
    constexpr bool resonant() const
    {
        return exponents[0] == exponents[1] && exponents[2] == exponents[3];
    }

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
    friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.degree() <=> b.degree(); c != 0) {
            return c;
        }
        return a.exponents <=> b.exponents;
    }
};

std::string to_string(const Monomial& m);

/// Gaussian rational a + b i, used for exact bracket identities.
struct GaussianRational {
    mpq_class re{0};
    mpq_class im{0};

    GaussianRational() = default;
    GaussianRational(long re_) : re(re_) {}
    GaussianRational(mpq_class re_, mpq_class im_) : re(std::move(re_)), im(std::move(im_)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator-(const GaussianRational& a)
    {
        return {mpq_class(-a.re), mpq_class(-a.im)};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {mpq_class(a.re * b.re - a.im * b.im), mpq_class(a.re * b.im + a.im * b.re)};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
};

template <class C>
struct coefficient_traits;

template <>
struct coefficient_traits<std::complex<double>> {
    static constexpr bool exact = false;
    static double magnitude(const std::complex<double>& c) { return std::abs(c); }
    static bool is_zero(const std::complex<double>& c) { return c == 0.0; }
    static std::complex<double> from_int(long n) { return {static_cast<double>(n), 0.0}; }
};

template <>
struct coefficient_traits<GaussianRational> {
    static constexpr bool exact = true;
    static double magnitude(const GaussianRational&) { return 0.0; }
    static bool is_zero(const GaussianRational& c) { return c.is_zero(); }
    static GaussianRational from_int(long n) { return GaussianRational(n); }
};

template <class C>
concept Coefficient = requires(const C& a, const C& b) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { coefficient_traits<C>::is_zero(a) } -> std::convertible_to<bool>;
    { coefficient_traits<C>::magnitude(a) } -> std::convertible_to<double>;
};

/// Float-mode terms below this fraction of the largest contribution are dropped.
inline constexpr double kRelativePurgeTolerance = 1e-14;

class ChartMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <Coefficient C>
class Polynomial {
public:
    using coefficient_type = C;
    using term_map = std::map<Monomial, C>;
    using traits = coefficient_traits<C>;

    explicit Polynomial(Chart chart = Chart::complex) : chart_(chart) {}

    static Polynomial monomial(Chart chart, const Monomial& m, const C& c)
    {
        Polynomial p(chart);
        p.add_term(m, c);
        return p;
    }

    static Polynomial constant(Chart chart, const C& c) { return monomial(chart, Monomial{}, c); }

    Chart chart() const { return chart_; }
    const term_map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? C{} : it->second;
    }

    /// -1 for the zero polynomial.
    int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    bool is_homogeneous(int d) const
    {
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const auto& t) { return t.first.degree() == d; });
    }

    double max_magnitude() const
    {
        double m = 0.0;
        for (const auto& [mono, c] : terms_) {
            m = std::max(m, traits::magnitude(c));
        }
        return m;
    }

    /// Accumulates c into the coefficient of m; exact zeros are removed.
    void add_term(const Monomial& m, const C& c)
    {
        if (traits::is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (traits::is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    /// Float mode: drop terms below kRelativePurgeTolerance * scale.
    void purge(double scale)
    {
        if constexpr (!traits::exact) {
            const double cutoff = kRelativePurgeTolerance * scale;
            std::erase_if(terms_, [cutoff](const auto& t) {
                return traits::is_zero(t.second) || traits::magnitude(t.second) < cutoff;
            });
        } else {
            std::erase_if(terms_, [](const auto& t) { return traits::is_zero(t.second); });
        }
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.chart_ == b.chart_ && a.terms_ == b.terms_;
    }

private:
    Chart chart_;
    term_map terms_;
};

using ComplexPolynomial = Polynomial<std::complex<double>>;
using ExactPolynomial = Polynomial<GaussianRational>;

namespace detail {

template <Coefficient C>
void require_same_chart(const Polynomial<C>& f, const Polynomial<C>& g)
{
    if (f.chart() != g.chart()) {
        throw ChartMismatch("polynomials live in different charts");
    }
}

inline Monomial shifted(const Monomial& a, const Monomial& b, int drop_a = -1, int drop_b = -1)
{
    Monomial m;
    for (std::size_t i = 0; i < 4; ++i) {
        m.exponents[i] = a.exponents[i] + b.exponents[i];
    }
    if (drop_a >= 0) {
        --m.exponents[static_cast<std::size_t>(drop_a)];
    }
    if (drop_b >= 0) {
        --m.exponents[static_cast<std::size_t>(drop_b)];
    }
    return m;
}

} // namespace detail

template <Coefficient C>
Polynomial<C> add(const Polynomial<C>& f, const Polynomial<C>& g)
{
    detail::require_same_chart(f, g);
    Polynomial<C> out = f;
    for (const auto& [m, c] : g.terms()) {
        out.add_term(m, c);
    }
    out.purge(std::max(f.max_magnitude(), g.max_magnitude()));
    return out;
}

template <Coefficient C>
Polynomial<C> scale(const Polynomial<C>& f, const C& s)
{
    Polynomial<C> out(f.chart());
    for (const auto& [m, c] : f.terms()) {
        out.add_term(m, c * s);
    }
    out.purge(out.max_magnitude());
    return out;
}

template <Coefficient C>
Polynomial<C> negate(const Polynomial<C>& f)
{
    return scale(f, coefficient_traits<C>::from_int(-1));
}

template <Coefficient C>
Polynomial<C> subtract(const Polynomial<C>& f, const Polynomial<C>& g)
{
    return add(f, negate(g));
}

template <Coefficient C>
Polynomial<C> multiply(const Polynomial<C>& f, const Polynomial<C>& g)
{
    detail::require_same_chart(f, g);
    Polynomial<C> out(f.chart());
    double scale_seen = 0.0;
    for (const auto& [ma, ca] : f.terms()) {
        for (const auto& [mb, cb] : g.terms()) {
            C prod = ca * cb;
            scale_seen = std::max(scale_seen, coefficient_traits<C>::magnitude(prod));
            out.add_term(detail::shifted(ma, mb), prod);
        }
    }
    out.purge(scale_seen);
    return out;
}

/// {f, g} = sum_k (df/dX_k dg/dY_k - df/dY_k dg/dX_k), (X_k, Y_k) canonical pairs.
template <Coefficient C>
Polynomial<C> poisson_bracket(const Polynomial<C>& f, const Polynomial<C>& g)
{
    detail::require_same_chart(f, g);
    using traits = coefficient_traits<C>;
    Polynomial<C> out(f.chart());
    double scale_seen = 0.0;
    for (const auto& [ma, ca] : f.terms()) {
        for (const auto& [mb, cb] : g.terms()) {
            for (int k = 0; k < 2; ++k) {
                const int x = 2 * k;
                const int y = 2 * k + 1;
                const long weight = static_cast<long>(ma[x]) * mb[y] - static_cast<long>(ma[y]) * mb[x];
                if (weight == 0) {
                    continue;
                }
                C term = (ca * cb) * traits::from_int(weight);
                scale_seen = std::max(scale_seen, traits::magnitude(term));
                out.add_term(detail::shifted(ma, mb, x, y), term);
            }
        }
    }
    out.purge(scale_seen);
    return out;
}

/// Derivative with respect to variable index 0..3 (X1, Y1, X2, Y2).
template <Coefficient C>
Polynomial<C> derivative(const Polynomial<C>& f, int variable)
{
    if (variable < 0 || variable > 3) {
        throw std::out_of_range("variable index must be in 0..3");
    }
    Polynomial<C> out(f.chart());
    for (const auto& [m, c] : f.terms()) {
        const int e = m[static_cast<std::size_t>(variable)];
        if (e == 0) {
            continue;
        }
        Monomial d = m;
        --d.exponents[static_cast<std::size_t>(variable)];
        out.add_term(d, c * coefficient_traits<C>::from_int(e));
    }
    return out;
}

/// Homogeneous degree-d part.
template <Coefficient C>
Polynomial<C> grade(const Polynomial<C>& f, int d)
{
    if (d < 0) {
        throw std::invalid_argument("grade: degree must be non-negative");
    }
    Polynomial<C> out(f.chart());
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() == d) {
            out.add_term(m, c);
        }
    }
    return out;
}

template <Coefficient C>
Polynomial<C> operator+(const Polynomial<C>& f, const Polynomial<C>& g)
{
    return add(f, g);
}
template <Coefficient C>
Polynomial<C> operator-(const Polynomial<C>& f, const Polynomial<C>& g)
{
    return subtract(f, g);
}
template <Coefficient C>
Polynomial<C> operator*(const Polynomial<C>& f, const Polynomial<C>& g)
{
    return multiply(f, g);
}

/// q_k = (X_k + i Y_k)/sqrt2, p_k = (i X_k + Y_k)/sqrt2. Canonical: {q_k, p_k} = 1.
ComplexPolynomial complexify(const ComplexPolynomial& f);
/// Inverse of complexify: X_k = (q_k - i p_k)/sqrt2, Y_k = (p_k - i q_k)/sqrt2.
ComplexPolynomial realify(const ComplexPolynomial& f);

/// Largest coefficient magnitude of f - g; charts must agree.
double max_abs_difference(const ComplexPolynomial& f, const ComplexPolynomial& g);

struct Frequencies {
    double omega1 = 1.0;
    double omega3 = 1.0;

    double max() const { return std::max(omega1, omega3); }
};

class InvalidHamiltonian : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Hamiltonian split into homogeneous parts of degree >= 2 whose quadratic
/// part is the pair of uncoupled oscillators with frequencies (omega1, omega3).
class GradedHamiltonian {
public:
    /// Splits `total` by degree. A missing quadratic part is synthesized from
    /// the frequencies; a present one must match it to 1e-9 relative.
    GradedHamiltonian(const ComplexPolynomial& total, Frequencies freqs);

    static ComplexPolynomial quadratic_part(Chart chart, Frequencies freqs);

    Chart chart() const { return chart_; }
    const Frequencies& frequencies() const { return freqs_; }
    const std::map<int, ComplexPolynomial>& parts() const { return parts_; }
    /// Empty polynomial when the degree is absent.
    ComplexPolynomial part(int degree) const;
    ComplexPolynomial total() const;

    GradedHamiltonian to_complex_chart() const;
    GradedHamiltonian to_real_chart() const;

private:
    Chart chart_;
    Frequencies freqs_;
    std::map<int, ComplexPolynomial> parts_;
};

} // namespace birkhoff
