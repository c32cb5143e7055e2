#include "birkhoff/rtbpmodel.hpp"

#include "birkhoff/normalform.hpp"
#include "rtbp_series.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

namespace birkhoff::rtbp {

namespace {

bool finite_all(std::initializer_list<double> xs)
{
    return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

void require_positive_frequencies(double omega1, double omega3)
{
    if (!(omega1 > 0.0) || !(omega3 > 0.0) || !std::isfinite(omega1) || !std::isfinite(omega3)) {
        throw DomainError(fmt::format("frequencies must be positive and finite (omega1={}, omega3={})",
                                      omega1, omega3));
    }
}

double clamp_finite(double x)
{
    constexpr double big = std::numeric_limits<double>::max();
    if (std::isnan(x)) {
        return 0.0;
    }
    return std::clamp(x, -big, big);
}

} // namespace

void ModelParams::validate() const
{
    if (!finite_all({mu, q, Q, A})) {
        throw DomainError("model parameters must be finite");
    }
    if (!(mu > 0.0 && mu < 1.0)) {
        throw DomainError(fmt::format("mu must lie in (0, 1), got {}", mu));
    }
    if (!(q > 0.0 && q <= 1.0)) {
        throw DomainError(fmt::format("q must lie in (0, 1], got {}", q));
    }
    if (!(Q > 0.0 && Q <= 1.0)) {
        throw DomainError(fmt::format("Q must lie in (0, 1], got {}", Q));
    }
    if (!(A >= 0.0)) {
        throw DomainError(fmt::format("A must be non-negative, got {}", A));
    }
}

bool ModelParams::within_supported_range() const
{
    return A <= kSupportedOblateness;
}

std::string_view series_name(Series s)
{
    switch (s) {
    case Series::a: return "a";
    case Series::c: return "c";
    case Series::a1: return "a1";
    case Series::a2: return "a2";
    case Series::a3: return "a3";
    case Series::a4: return "a4";
    case Series::b1: return "b1";
    case Series::b3: return "b3";
    case Series::b5: return "b5";
    }
    return "unknown";
}

double CoefficientSet::get(Series s) const
{
    switch (s) {
    case Series::a: return a;
    case Series::c: return c;
    case Series::a1: return a1;
    case Series::a2: return a2;
    case Series::a3: return a3;
    case Series::a4: return a4;
    case Series::b1: return b1;
    case Series::b3: return b3;
    case Series::b5: return b5;
    }
    return 0.0;
}

void CoefficientSet::set(Series s, double value)
{
    switch (s) {
    case Series::a: a = value; break;
    case Series::c: c = value; break;
    case Series::a1: a1 = value; break;
    case Series::a2: a2 = value; break;
    case Series::a3: a3 = value; break;
    case Series::a4: a4 = value; break;
    case Series::b1: b1 = value; break;
    case Series::b3: b3 = value; break;
    case Series::b5: b5 = value; break;
    }
}

CubicQuarticCoefficients CoefficientSet::cubic_quartic() const
{
    return {.a1 = a1, .a2 = a2, .a3 = a3, .a4 = a4, .b1 = b1, .b3 = b3, .b5 = b5};
}

double SeriesOrders::sum(double sqrt_a, int max_half_power) const
{
    double total = 0.0;
    double power = 1.0;
    for (int k = 0; k <= std::min(max_half_power, kMaxHalfPower); ++k) {
        total += by_half_power[static_cast<std::size_t>(k)] * power;
        power *= sqrt_a;
    }
    return total;
}

std::array<SeriesOrders, kSeriesCount> coefficient_orders(const ModelParams& p)
{
    p.validate();
    std::array<SeriesOrders, kSeriesCount> out{};
    const auto& table = detail::series_table();
    for (std::size_t s = 0; s < kSeriesCount; ++s) {
        for (const detail::Block& block : table[s]) {
            double numerator = 0.0;
            for (const detail::Term& t : block.terms) {
                numerator += t.coefficient * detail::evaluate(t.factors, p);
            }
            out[s].by_half_power[static_cast<std::size_t>(block.half_power)] +=
                block.prefactor * numerator / detail::evaluate(block.denominator, p);
        }
    }
    return out;
}

CoefficientSet coefficients(const ModelParams& p, int max_half_power)
{
    const auto orders = coefficient_orders(p);
    const double sqrt_a = std::sqrt(p.A);
    CoefficientSet out;
    for (std::size_t s = 0; s < kSeriesCount; ++s) {
        const double value = orders[s].sum(sqrt_a, max_half_power);
        if (!std::isfinite(value)) {
            throw DomainError(fmt::format("series {} is not finite at these parameters",
                                          series_name(static_cast<Series>(s))));
        }
        out.set(static_cast<Series>(s), value);
    }
    return out;
}

std::vector<TermContribution> trace_series(const ModelParams& p)
{
    p.validate();
    std::vector<TermContribution> out;
    const auto& table = detail::series_table();
    const double sqrt_a = std::sqrt(p.A);
    for (std::size_t s = 0; s < kSeriesCount; ++s) {
        int block_index = 0;
        for (const detail::Block& block : table[s]) {
            const double scale = block.prefactor / detail::evaluate(block.denominator, p) *
                                 std::pow(sqrt_a, block.half_power);
            int term_index = 0;
            for (const detail::Term& t : block.terms) {
                out.push_back({static_cast<Series>(s), block.half_power, block_index, term_index,
                               scale * t.coefficient * detail::evaluate(t.factors, p)});
                ++term_index;
            }
            ++block_index;
        }
    }
    return out;
}

GradedHamiltonian build_model_hamiltonian(const CubicQuarticCoefficients& c, Frequencies freqs)
{
    ComplexPolynomial h = GradedHamiltonian::quadratic_part(Chart::real, freqs);
    // Exponents in (u, pu, v, pv).
    h.add_term({3, 0, 0, 0}, c.a1);
    h.add_term({2, 0, 1, 0}, c.a2);
    h.add_term({1, 0, 2, 0}, c.a3);
    h.add_term({0, 0, 3, 0}, c.a4);
    h.add_term({4, 0, 0, 0}, c.b1);
    h.add_term({2, 0, 2, 0}, c.b3);
    h.add_term({0, 0, 4, 0}, c.b5);
    return GradedHamiltonian(h, freqs);
}

std::vector<PoleFlag> pole_flags(const Frequencies& freqs)
{
    const double band = kGuardBand * freqs.omega3;
    std::vector<PoleFlag> out;
    const double vertical = 2 * freqs.omega1 - freqs.omega3;
    const double planar = freqs.omega1 - 2 * freqs.omega3;
    if (std::abs(vertical) < band) {
        out.push_back({Resonance::vertical_twice_planar, vertical});
    }
    if (std::abs(planar) < band) {
        out.push_back({Resonance::planar_twice_vertical, planar});
    }
    if (freqs.omega1 < band) {
        out.push_back({Resonance::planar_zero, freqs.omega1});
    }
    return out;
}

D2Value d2_eval(const CoefficientSet& c, const Frequencies& freqs)
{
    require_positive_frequencies(freqs.omega1, freqs.omega3);
    D2Value out;
    out.poles = pole_flags(freqs);
    try {
        out.D2 = d2_closed(c.cubic_quartic(), freqs);
    } catch (const PoleError&) {
        out.D2 = d2_expanded_unchecked(c.cubic_quartic(), freqs);
    }
    out.D2 = clamp_finite(out.D2);
    return out;
}

D2Value d2_eval(const ModelParams& p, double omega1, double omega3)
{
    require_positive_frequencies(omega1, omega3);
    return d2_eval(coefficients(p), Frequencies{omega1, omega3});
}

std::array<double, 2 * kMaxHalfPower + 1> d2_orders(const ModelParams& p, const Frequencies& freqs)
{
    require_positive_frequencies(freqs.omega1, freqs.omega3);
    const auto orders = coefficient_orders(p);
    constexpr std::array<Series, 4> cubic{Series::a1, Series::a2, Series::a3, Series::a4};
    constexpr std::array<Series, 3> quartic{Series::b1, Series::b3, Series::b5};

    // D2 = a^T M a + L . b with a = (a1..a4), b = (b1, b3, b5).
    auto d2_of = [&](const std::array<double, 4>& a, const std::array<double, 3>& b) {
        const CubicQuarticCoefficients c{a[0], a[1], a[2], a[3], b[0], b[1], b[2]};
        return d2_expanded_unchecked(c, freqs);
    };
    auto unit_a = [](std::size_t i, std::size_t j) {
        std::array<double, 4> a{};
        a[i] += 1.0;
        a[j] += 1.0;
        return a;
    };
    std::array<std::array<double, 4>, 4> m{};
    for (std::size_t i = 0; i < 4; ++i) {
        std::array<double, 4> e{};
        e[i] = 1.0;
        m[i][i] = d2_of(e, {});
    }
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            double mij = (d2_of(unit_a(i, j), {}) - m[i][i] - m[j][j]) / 2;
            // Products absent from D2 leave only differencing round-off.
            if (std::abs(mij) <= 64 * std::numeric_limits<double>::epsilon() *
                                     (std::abs(m[i][i]) + std::abs(m[j][j]))) {
                mij = 0.0;
            }
            m[i][j] = m[j][i] = mij;
        }
    }
    std::array<double, 3> l{};
    for (std::size_t j = 0; j < 3; ++j) {
        std::array<double, 3> e{};
        e[j] = 1.0;
        l[j] = d2_of({}, e);
    }

    auto coeff = [&](Series s, int k) {
        return orders[static_cast<std::size_t>(s)].by_half_power[static_cast<std::size_t>(k)];
    };
    std::array<double, 2 * kMaxHalfPower + 1> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            for (int k = 0; k <= kMaxHalfPower; ++k) {
                for (int n = 0; n <= kMaxHalfPower; ++n) {
                    out[static_cast<std::size_t>(k + n)] += m[i][j] * coeff(cubic[i], k) * coeff(cubic[j], n);
                }
            }
        }
    }
    for (std::size_t j = 0; j < 3; ++j) {
        for (int k = 0; k <= kMaxHalfPower; ++k) {
            out[static_cast<std::size_t>(k)] += l[j] * coeff(quartic[j], k);
        }
    }
    return out;
}

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::stable: return "stable";
    case Status::resonant: return "resonant";
    case Status::degenerate: return "degenerate";
    case Status::pole: return "pole";
    }
    return "unknown";
}

namespace {

// Fourth-order relations k1 omega1 = k3 omega3 that the degree-4 normalization
// cannot remove; the second-order ones are the poles of D2.
struct FourthOrderRelation {
    int k1;
    int k3;
    const char* name;
};

constexpr std::array<FourthOrderRelation, 3> kFourthOrder{{
    {1, 1, "omega1=omega3"},
    {3, 1, "omega3=3*omega1"},
    {1, 3, "omega1=3*omega3"},
}};

} // namespace

StabilityVerdict stability_verdict(const CoefficientSet& c, double omega1, double omega3,
                                   double d2_tolerance)
{
    require_positive_frequencies(omega1, omega3);
    if (!(d2_tolerance >= 0.0)) {
        throw DomainError("d2_tolerance must be non-negative");
    }
    const Frequencies freqs{omega1, omega3};
    const D2Value value = d2_eval(c, freqs);

    StabilityVerdict v;
    v.D2 = value.D2;
    v.omega1 = omega1;
    v.omega3 = omega3;
    v.d2_tolerance = d2_tolerance;

    for (const PoleFlag& f : value.poles) {
        v.notes.push_back(fmt::format("pole {} (divisor {:.6e})", resonance_name(f.resonance), f.divisor));
    }
    bool resonant = false;
    const double hard = default_divisor_tolerance(freqs);
    for (const auto& r : kFourthOrder) {
        const double divisor = r.k1 * omega1 - r.k3 * omega3;
        if (std::abs(divisor) < hard) {
            resonant = true;
            v.notes.push_back(fmt::format("resonance {} (divisor {:.6e})", r.name, divisor));
        } else if (std::abs(divisor) < kGuardBand * omega3) {
            v.notes.push_back(fmt::format("near resonance {} (divisor {:.6e})", r.name, divisor));
        }
    }
    const bool above = std::abs(v.D2) > d2_tolerance;
    v.notes.push_back(fmt::format("|D2| = {:.6e} {} tolerance {:.6e}", std::abs(v.D2),
                                  above ? ">" : "<=", d2_tolerance));

    if (value.pole()) {
        v.status = Status::pole;
    } else if (resonant) {
        v.status = Status::resonant;
    } else if (!above) {
        v.status = Status::degenerate;
    } else {
        v.status = Status::stable;
    }
    return v;
}

StabilityVerdict stability_verdict(const ModelParams& p, double omega1, double omega3,
                                   double d2_tolerance)
{
    return stability_verdict(coefficients(p), omega1, omega3, d2_tolerance);
}

std::string_view flag_name(RowFlag f)
{
    switch (f) {
    case RowFlag::ok: return "ok";
    case RowFlag::pole: return "pole";
    case RowFlag::degenerate: return "degenerate";
    }
    return "unknown";
}

namespace {

unsigned scan_threads(const ScanOptions& options, std::size_t rows)
{
    unsigned n = options.threads;
    if (n == 0) {
        n = std::max(1U, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("BIRKHOFF_D2_THREADS")) {
            char* end = nullptr;
            const long cap = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && cap > 0) {
                n = std::min(n, static_cast<unsigned>(std::min<long>(cap, 1024)));
            }
        }
    }
    // Below this many rows per thread, spawning costs more than it saves.
    constexpr std::size_t min_rows_per_thread = 512;
    const std::size_t useful = std::max<std::size_t>(1, rows / min_rows_per_thread);
    return static_cast<unsigned>(std::min<std::size_t>(n, useful));
}

double median_abs(std::vector<double> values)
{
    if (values.empty()) {
        return 0.0;
    }
    for (double& x : values) {
        x = std::abs(x);
    }
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    const double upper = values[mid];
    const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

} // namespace

Scan scan_omega1(const CoefficientSet& c, double omega3, double lo, double hi, int steps,
                 const ScanOptions& options)
{
    if (!(omega3 > 0.0) || !std::isfinite(omega3)) {
        throw DomainError("omega3 must be positive and finite");
    }
    if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("scan grid needs 0 < lo < hi");
    }
    if (steps < 2) {
        throw std::invalid_argument("scan grid needs at least 2 steps");
    }
    if (options.d2_tolerance && !(*options.d2_tolerance >= 0.0)) {
        throw std::invalid_argument("d2_tolerance must be non-negative");
    }

    Scan scan;
    scan.rows.resize(static_cast<std::size_t>(steps));
    const double width = hi - lo;
    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            ScanRow& row = scan.rows[k];
            row.omega1 = k + 1 == scan.rows.size()
                             ? hi
                             : lo + width * static_cast<double>(k) / static_cast<double>(steps - 1);
            D2Value value = d2_eval(c, Frequencies{row.omega1, omega3});
            row.D2 = value.D2;
            row.poles = std::move(value.poles);
        }
    };

    const unsigned threads = scan_threads(options, scan.rows.size());
    if (threads <= 1) {
        fill(0, scan.rows.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (scan.rows.size() + threads - 1) / threads;
        for (std::size_t begin = 0; begin < scan.rows.size(); begin += chunk) {
            pool.emplace_back(fill, begin, std::min(scan.rows.size(), begin + chunk));
        }
    }

    if (options.d2_tolerance) {
        scan.d2_tolerance = *options.d2_tolerance;
    } else {
        std::vector<double> regular;
        for (const ScanRow& row : scan.rows) {
            if (row.poles.empty()) {
                regular.push_back(row.D2);
            }
        }
        scan.d2_tolerance = kRelativeD2Tolerance * median_abs(std::move(regular));
    }
    for (ScanRow& row : scan.rows) {
        if (!row.poles.empty()) {
            row.flag = RowFlag::pole;
        } else if (std::abs(row.D2) <= scan.d2_tolerance) {
            row.flag = RowFlag::degenerate;
        } else {
            row.flag = RowFlag::ok;
        }
    }
    return scan;
}

Scan scan_omega1(const ModelParams& p, double omega3, double lo, double hi, int steps,
                 const ScanOptions& options)
{
    return scan_omega1(coefficients(p), omega3, lo, hi, steps, options);
}

double default_d2_tolerance(const ModelParams& p, double omega3, double lo, double hi, int steps)
{
    ScanOptions options;
    options.threads = 1;
    return scan_omega1(p, omega3, lo, hi, steps, options).d2_tolerance;
}

} // namespace birkhoff::rtbp
