#pragma once

// Photogravitational restricted three-body problem with an oblate smaller
// primary: coefficient series in (mu, q, Q, A) around the out-of-plane
// equilibrium L6, the model Hamiltonian, D2(omega1, omega3) and the Arnold
// stability verdict.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "birkhoff/closedform.hpp"
#include "birkhoff/polyalg.hpp"

namespace birkhoff::rtbp {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// mu: mass ratio in (0, 1); q, Q: radiation factors of the bigger and smaller
/// primary in (0, 1]; A: oblateness of the smaller primary, A >= 0. The
/// series are truncated at A^2, so A <= kSupportedOblateness is the supported range.
struct ModelParams {
    double mu = 0.0;
    double q = 1.0;
    double Q = 1.0;
    double A = 0.0;

    void validate() const;
    bool within_supported_range() const;
};

inline constexpr double kSupportedOblateness = 0.01;

enum class Series : std::size_t { a, c, a1, a2, a3, a4, b1, b3, b5 };
inline constexpr std::size_t kSeriesCount = 9;
std::string_view series_name(Series s);

/// Series are polynomials in sqrt(A) through A^2.
inline constexpr int kMaxHalfPower = 4;

struct CoefficientSet {
    double a = 0.0;
    double c = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
    double b1 = 0.0;
    double b3 = 0.0;
    double b5 = 0.0;

    double get(Series s) const;
    void set(Series s, double value);
    CubicQuarticCoefficients cubic_quartic() const;
};

/// by_half_power[k] is the coefficient of A^(k/2).
struct SeriesOrders {
    std::array<double, kMaxHalfPower + 1> by_half_power{};

    double sum(double sqrt_a, int max_half_power = kMaxHalfPower) const;
};

std::array<SeriesOrders, kSeriesCount> coefficient_orders(const ModelParams& p);

/// Evaluates every series, keeping powers of A up to A^(max_half_power/2).
CoefficientSet coefficients(const ModelParams& p, int max_half_power = kMaxHalfPower);

/// One transcribed term of one series, evaluated at p (including its A power).
struct TermContribution {
    Series series;
    int half_power;
    int block;
    int term;
    double value;
};

std::vector<TermContribution> trace_series(const ModelParams& p);

/// H2 = (omega1/2)(u^2 + pu^2) + (omega3/2)(v^2 + pv^2),
/// H3 = a1 u^3 + a2 u^2 v + a3 u v^2 + a4 v^3,
/// H4 = b1 u^4 + b3 u^2 v^2 + b5 v^4, in the real chart (u, pu, v, pv).
GradedHamiltonian build_model_hamiltonian(const CubicQuarticCoefficients& c, Frequencies freqs);

/// Half-width of the plotting guard bands around each pole, relative to omega3.
inline constexpr double kGuardBand = 0.01;

struct PoleFlag {
    Resonance resonance;
    double divisor;
};

/// Poles of D2 whose divisor lies inside the guard band.
std::vector<PoleFlag> pole_flags(const Frequencies& freqs);

struct D2Value {
    double D2 = 0.0;
    std::vector<PoleFlag> poles;

    bool pole() const { return !poles.empty(); }
};

/// D2 from the closed-form coefficients. Inside a guard band the value is
/// still computed; a non-finite result is clamped to +-max double.
D2Value d2_eval(const CoefficientSet& c, const Frequencies& freqs);
D2Value d2_eval(const ModelParams& p, double omega1, double omega3);

/// D2 as a polynomial in sqrt(A): entry k multiplies A^(k/2).
std::array<double, 2 * kMaxHalfPower + 1> d2_orders(const ModelParams& p, const Frequencies& freqs);

enum class Status { stable, resonant, degenerate, pole };
std::string_view status_name(Status s);

struct StabilityVerdict {
    Status status = Status::degenerate;
    double D2 = 0.0;
    double omega1 = 0.0;
    double omega3 = 0.0;
    double d2_tolerance = 0.0;
    std::vector<std::string> notes;
};

StabilityVerdict stability_verdict(const CoefficientSet& c, double omega1, double omega3,
                                   double d2_tolerance);
StabilityVerdict stability_verdict(const ModelParams& p, double omega1, double omega3,
                                   double d2_tolerance);

enum class RowFlag { ok, pole, degenerate };
std::string_view flag_name(RowFlag f);

struct ScanRow {
    double omega1 = 0.0;
    double D2 = 0.0;
    RowFlag flag = RowFlag::ok;
    std::vector<PoleFlag> poles;
};

struct ScanOptions {
    /// Absolute tolerance for degenerate rows; unset means
    /// kRelativeD2Tolerance * median |D2| over the non-pole rows.
    std::optional<double> d2_tolerance;
    /// 0: use BIRKHOFF_D2_THREADS or the hardware concurrency.
    unsigned threads = 0;
};

inline constexpr double kRelativeD2Tolerance = 1e-6;

struct Scan {
    std::vector<ScanRow> rows;
    double d2_tolerance = 0.0;
};

/// Uniform grid lo..hi inclusive with `steps` points; ordered by omega1.
Scan scan_omega1(const ModelParams& p, double omega3, double lo, double hi, int steps,
                 const ScanOptions& options = {});
Scan scan_omega1(const CoefficientSet& c, double omega3, double lo, double hi, int steps,
                 const ScanOptions& options = {});

/// kRelativeD2Tolerance * median |D2| over the non-pole rows of a grid.
double default_d2_tolerance(const ModelParams& p, double omega3, double lo = 0.05, double hi = 0.95,
                            int steps = 181);

} // namespace birkhoff::rtbp
