// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>
#include <fmt/format.h>

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "birkhoff/closedform.hpp"
#include "birkhoff/normalform.hpp"
#include "birkhoff/polyalg.hpp"
#include "birkhoff/rtbpmodel.hpp"
#include "support.hpp"

using namespace birkhoff;
namespace odeint = boost::numeric::odeint;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass;
    std::string summary;
    std::vector<std::string> info;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o)
{
    fmt::print("criterion {} {}  {}: {}\n", id, o.pass ? "PASS" : "FAIL", title, o.summary);
    for (const std::string& line : o.info) {
        fmt::print("    {}\n", line);
    }
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
}

const rtbp::ModelParams kReferencePoint{.mu = 0.00025, .q = 0.025, .Q = 0.00025, .A = 0.00025};

// 1 ---------------------------------------------------------------------------

Outcome bracket_algebra()
{
    const auto start = Clock::now();
    std::mt19937_64 rng(20240601);
    const ExactPolynomial zero(Chart::complex);
    int bad_antisymmetry = 0;
    int bad_jacobi = 0;
    int bad_leibniz = 0;
    constexpr int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const auto f = testing::random_exact(rng, 4);
        const auto g = testing::random_exact(rng, 4);
        const auto h = testing::random_exact(rng, 4);
        bad_antisymmetry += !(poisson_bracket(f, g) + poisson_bracket(g, f) == zero);
        bad_jacobi += !(poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                            poisson_bracket(h, poisson_bracket(f, g)) ==
                        zero);
        bad_leibniz += !(poisson_bracket(f, g * h) - (poisson_bracket(f, g) * h + g * poisson_bracket(f, h)) == zero);
    }
    const double elapsed = seconds_since(start);
    const bool pass = bad_antisymmetry == 0 && bad_jacobi == 0 && bad_leibniz == 0 && elapsed < 5.0;
    return {pass,
            fmt::format("{} random triples, nonzero residuals: antisymmetry {}, Jacobi {}, Leibniz {}; {:.2f} s (limit 5 s)",
                        trials, bad_antisymmetry, bad_jacobi, bad_leibniz, elapsed),
            {}};
}

// 2 ---------------------------------------------------------------------------

Outcome engine_vs_printed()
{
    const auto start = Clock::now();
    std::mt19937_64 rng(20240602);
    double worst = 0.0;
    double worst_standard = 0.0;
    const char* worst_name = "";
    int failing_draws = 0;
    constexpr int draws = 100;
    for (int d = 0; d < draws; ++d) {
        const auto c = testing::random_coefficients(rng);
        const auto f = testing::random_nonresonant(rng);
        const auto r = normalize(rtbp::build_model_hamiltonian(c, f).to_complex_chart());
        const std::array<std::pair<const char*, std::array<double, 3>>, 3> rows{{
            {"K2200", {r.K2200, k2200(c, f), testing::standard::k2200(c, f)}},
            {"K1111", {r.K1111, k1111(c, f), testing::standard::k1111(c, f)}},
            {"K0022", {r.K0022, k0022(c, f), testing::standard::k0022(c, f)}},
        }};
        bool draw_ok = true;
        for (const auto& [name, v] : rows) {
            const double e = std::abs(v[0] - v[1]) / std::max(std::abs(v[1]), 1e-300);
            draw_ok = draw_ok && e <= 1e-9;
            if (e > worst) {
                worst = e;
                worst_name = name;
            }
            worst_standard = std::max(worst_standard, std::abs(v[0] - v[2]) / std::max(std::abs(v[2]), 1e-300));
        }
        failing_draws += !draw_ok;
    }
    const double elapsed = seconds_since(start);
    const bool pass = failing_draws == 0 && elapsed < 10.0;
    return {pass,
            fmt::format("{} draws, {} outside 1e-9; worst relative error {:.3e} ({}); {:.2f} s", draws,
                        failing_draws, worst, worst_name, elapsed),
            {fmt::format("engine vs independent angle-averaging formulas: worst relative error {:.3e}",
                         worst_standard)}};
}

// 3 ---------------------------------------------------------------------------

struct Orbit {
    double action;
    double frequency;
};

// H = (w/2)(q^2 + p^2) + a q^3 + b q^4 from (q0, 0). The third component
// accumulates w p^2 = p dq/dt, so after one period it equals 2 pi J.
Orbit integrate_orbit(double omega, double a, double b, double q0)
{
    using State = std::array<double, 3>;
    auto rhs = [=](const State& x, State& dx, double) {
        const double q = x[0];
        const double p = x[1];
        dx[0] = omega * p;
        dx[1] = -(omega * q + 3 * a * q * q + 4 * b * q * q * q);
        dx[2] = omega * p * p;
    };
    auto stepper = odeint::make_dense_output(1e-13, 1e-13, odeint::runge_kutta_dopri5<State>());
    stepper.initialize(State{q0, 0.0, 0.0}, 0.0, 1e-3);
    bool seen_positive = false;
    for (;;) {
        stepper.do_step(rhs);
        const State& now = stepper.current_state();
        seen_positive = seen_positive || now[1] > 0.0;
        if (seen_positive && now[1] <= 0.0) {
            // p falls back through zero at the starting turning point.
            double lo = stepper.previous_time();
            double hi = stepper.current_time();
            State x{};
            for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
                const double mid = 0.5 * (lo + hi);
                stepper.calc_state(mid, x);
                (x[1] > 0.0 ? lo : hi) = mid;
            }
            const double period = 0.5 * (lo + hi);
            stepper.calc_state(period, x);
            return {x[2] / (2 * std::numbers::pi), 2 * std::numbers::pi / period};
        }
        if (stepper.current_time() > 1e4 / omega) {
            throw std::runtime_error("orbit did not close");
        }
    }
}

// Orbit whose action equals `target`, by secant iteration on the amplitude.
Orbit orbit_with_action(double omega, double a, double b, double target)
{
    double x0 = std::sqrt(2 * target);
    double x1 = 1.01 * x0;
    double f0 = integrate_orbit(omega, a, b, x0).action - target;
    double f1 = integrate_orbit(omega, a, b, x1).action - target;
    for (int it = 0; it < 50 && std::abs(f1) > 1e-14 * target; ++it) {
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = integrate_orbit(omega, a, b, x1).action - target;
    }
    return integrate_orbit(omega, a, b, x1);
}

Outcome one_dof_oracle()
{
    const auto start = Clock::now();
    constexpr double action = 1e-3;
    struct Case {
        double omega, a, b;
    };
    const Case cases[] = {{1, 0, 1}, {1, 1, 0}, {2, 0.5, 0.5}};
    bool pass = true;
    std::vector<std::string> parts;
    std::vector<std::string> info;
    for (const Case& c : cases) {
        const double c2 = frequency_shift_1dof(c.omega, c.a, c.b);
        const Orbit orbit = orbit_with_action(c.omega, c.a, c.b, action);
        const double measured = orbit.frequency - c.omega;
        const double predicted = 2 * c2 * orbit.action;
        const double rel = std::abs(predicted - measured) / std::abs(measured);
        pass = pass && rel <= 0.01;
        parts.push_back(fmt::format("({:g},{:g},{:g}) {:.3f}%", c.omega, c.a, c.b, 100 * rel));

        // Richardson step: the O(J^2) remainder makes shift/J linear in J.
        const Orbit half = orbit_with_action(c.omega, c.a, c.b, action / 2);
        const double slope_full = measured / orbit.action;
        const double slope_half = (half.frequency - c.omega) / half.action;
        const double extrapolated = 2 * slope_half - slope_full;
        info.push_back(fmt::format(
            "({:g},{:g},{:g}): c2 = {:.10g}; measured shift {:.6e} vs predicted {:.6e} at J = {:.3e}; "
            "extrapolated d(omega)/dJ at J->0 = {:.8g} vs 2 c2 = {:.8g} ({:.2e} relative)",
            c.omega, c.a, c.b, c2, measured, predicted, orbit.action, extrapolated, 2 * c2,
            std::abs(extrapolated - 2 * c2) / std::abs(2 * c2)));
    }
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 30.0;
    std::string summary = "frequency-shift error at J = 1e-3 (limit 1%):";
    for (const auto& p : parts) {
        summary += " " + p;
    }
    summary += fmt::format("; {:.2f} s", elapsed);
    return {pass, summary, info};
}

// 4 ---------------------------------------------------------------------------

using BasisFn = std::function<double(double)>;

struct Fit {
    Eigen::VectorXd coefficients;
    double relative_residual;
    Eigen::Index rank;
};

Fit least_squares(const std::vector<double>& xs, const std::vector<double>& ys, const std::vector<BasisFn>& basis)
{
    const auto n = static_cast<Eigen::Index>(xs.size());
    const auto m = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd design(n, m);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            design(i, j) = basis[static_cast<std::size_t>(j)](xs[static_cast<std::size_t>(i)]);
        }
        rhs(i) = ys[static_cast<std::size_t>(i)];
    }
    // Column equilibration before the rank-revealing solve.
    Eigen::VectorXd norms = design.colwise().norm().transpose();
    for (Eigen::Index j = 0; j < m; ++j) {
        design.col(j) /= norms(j);
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design);
    cod.setThreshold(1e-12);
    Eigen::VectorXd scaled = cod.solve(rhs);
    const double residual = (design * scaled - rhs).norm() / rhs.norm();
    return {scaled.cwiseQuotient(norms), residual, cod.rank()};
}

Outcome numeric_specialization()
{
    const std::vector<BasisFn> a0_basis{
        [](double) { return 1.0; },
        [](double w) { return w; },
        [](double w) { return w * w; },
        [](double w) { return 1 / w; },
        [](double w) { return w / (w * w - 4); },
        [](double w) { return w * w / (w * w - 4); },
        [](double w) { return w * w * w / (w * w - 4); },
    };
    std::vector<BasisFn> full_basis = a0_basis;
    full_basis.push_back([](double w) { return 1 / (1 - 4 * w * w); });
    full_basis.push_back([](double w) { return w / (1 - 4 * w * w); });
    full_basis.push_back([](double w) { return w * w / (1 - 4 * w * w); });

    std::vector<double> xs;
    std::vector<double> order0;
    std::vector<double> order2;
    std::vector<double> truncated;
    for (int k = 0; k < 600; ++k) {
        const double w = 0.05 + 2.95 * k / 599.0;
        if (std::abs(w - 0.5) < 0.02 || std::abs(w - 2.0) < 0.04) {
            continue;
        }
        const auto orders = rtbp::d2_orders(kReferencePoint, {w, 1.0});
        xs.push_back(w);
        order0.push_back(orders[0]);
        order2.push_back(orders[2]);
        truncated.push_back(orders[0] + kReferencePoint.A * orders[2]);
    }

    const Fit fit0 = least_squares(xs, order0, a0_basis);
    const double constant = fit0.coefficients(0);
    const double inverse = fit0.coefficients(3);
    const double err_constant = std::abs(constant / 5.76096e14 - 1);
    const double err_inverse = std::abs(inverse / -3.2e14 - 1);
    const bool pass = err_constant <= 0.005 && err_inverse <= 0.005 && fit0.relative_residual < 1e-8;

    const Fit fit2 = least_squares(xs, order2, full_basis);
    const Fit fit_trunc = least_squares(xs, truncated, full_basis);
    return {pass,
            fmt::format("A^0 part of D2: constant {:.6e} (printed 5.76096e14, {:.2e} rel), 1/omega1 {:.6e} "
                        "(printed -3.2e14, {:.2e} rel); fit residual {:.1e}",
                        constant, err_constant, inverse, err_inverse, fit0.relative_residual),
            {fmt::format("A^0 basis rank {} of 7 (omega1^3/(omega1^2-4) = omega1 + 4 omega1/(omega1^2-4)); "
                         "constant and 1/omega1 columns are outside the dependent set",
                         fit0.rank),
             fmt::format("A^1 part on the 10-function basis: rank {}, residual {:.1e}, 1/omega1 coefficient "
                         "{:.6e} (printed 1.024e23)",
                         fit2.rank, fit2.relative_residual, fit2.coefficients(3)),
             fmt::format("A^0 + A*A^1 on the 10-function basis: rank {}; its constant is not identifiable "
                         "(omega1^2/(1-4 omega1^2) = -1/4 + 1/(4(1-4 omega1^2)))",
                         fit_trunc.rank),
             fmt::format("D2 at A = {:g} including the sqrt(A) orders at omega1 = 0.3: {:.6e}", kReferencePoint.A,
                         rtbp::d2_eval(kReferencePoint, 0.3, 1.0).D2)}};
}

// 5 ---------------------------------------------------------------------------

Outcome asymptote()
{
    const auto start = Clock::now();
    constexpr double lo = 0.05;
    constexpr double hi = 0.95;
    constexpr int steps = 181;
    const double step = (hi - lo) / (steps - 1);
    const rtbp::Scan scan = rtbp::scan_omega1(kReferencePoint, 1.0, lo, hi, steps);
    const double elapsed = seconds_since(start);

    std::vector<std::pair<std::size_t, std::size_t>> windows;
    for (std::size_t k = 0; k < scan.rows.size(); ++k) {
        if (scan.rows[k].flag != rtbp::RowFlag::pole) {
            continue;
        }
        if (!windows.empty() && windows.back().second + 1 == k) {
            windows.back().second = k;
        } else {
            windows.emplace_back(k, k);
        }
    }
    if (windows.size() != 1) {
        return {false, fmt::format("{} pole-flagged windows (expected 1)", windows.size()), {}};
    }
    const auto [first, last] = windows.front();
    const double center = 0.5 * (scan.rows[first].omega1 + scan.rows[last].omega1);
    const bool centered = std::abs(center - 0.5) <= step + 1e-12;

    bool left_increasing = true;
    bool right_increasing = true;
    for (std::size_t k = 0; k + 1 < first; ++k) {
        if (scan.rows[k].omega1 >= 0.45 - 1e-12) {
            left_increasing = left_increasing && std::abs(scan.rows[k + 1].D2) > std::abs(scan.rows[k].D2);
        }
    }
    for (std::size_t k = last + 1; k + 1 < scan.rows.size(); ++k) {
        if (scan.rows[k + 1].omega1 <= 0.55 + 1e-12) {
            right_increasing = right_increasing && std::abs(scan.rows[k].D2) > std::abs(scan.rows[k + 1].D2);
        }
    }
    const double before = scan.rows[first - 1].D2;
    const double after = scan.rows[last + 1].D2;
    const bool sign_change = before * after < 0.0;
    const bool pass = centered && left_increasing && right_increasing && sign_change && elapsed < 1.0;
    return {pass,
            fmt::format("one window [{:.4f}, {:.4f}] centered at {:.4f}; |D2| rising toward it: left {}, right {}; "
                        "D2 {:.3e} -> {:.3e}; {:.3f} s",
                        scan.rows[first].omega1, scan.rows[last].omega1, center, left_increasing,
                        right_increasing, before, after, elapsed),
            {}};
}

// 6 ---------------------------------------------------------------------------

Outcome verdict()
{
    const double tol = rtbp::default_d2_tolerance(kReferencePoint, 1.0);
    const rtbp::Scan scan = rtbp::scan_omega1(kReferencePoint, 1.0, 0.05, 0.95, 181);
    int checked = 0;
    int stable = 0;
    double smallest = std::numeric_limits<double>::infinity();
    for (const rtbp::ScanRow& row : scan.rows) {
        if (row.flag == rtbp::RowFlag::pole) {
            continue;
        }
        ++checked;
        const auto v = rtbp::stability_verdict(kReferencePoint, row.omega1, 1.0, tol);
        stable += v.status == rtbp::Status::stable && std::abs(v.D2) > tol;
        smallest = std::min(smallest, std::abs(v.D2));
    }
    return {stable == checked && checked > 0,
            fmt::format("{}/{} non-flagged points stable; min |D2| {:.3e} vs d2_tolerance {:.3e}", stable, checked,
                        smallest, tol),
            {}};
}

// 7 ---------------------------------------------------------------------------

Outcome scaling()
{
    std::mt19937_64 rng(20240607);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const auto c = testing::random_coefficients(rng);
        const auto f = testing::random_nonresonant(rng);
        const double base = d2_closed(c, f);
        for (double l : {0.5, 2.0}) {
            const CubicQuarticCoefficients s{l * c.a1,     l * c.a2,     l * c.a3,    l * c.a4,
                                             l * l * c.b1, l * l * c.b3, l * l * c.b5};
            worst = std::max(worst, std::abs(d2_closed(s, f) - l * l * base) / std::abs(l * l * base));
        }
    }
    return {worst <= 1e-12, fmt::format("40 evaluations, worst relative error {:.3e} (limit 1e-12)", worst), {}};
}

// 8 ---------------------------------------------------------------------------

Outcome performance()
{
    std::mt19937_64 rng(20240608);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Frequencies f{0.73, 1.0};
    ComplexPolynomial p(Chart::complex);
    for (int d = 3; d <= 4; ++d) {
        for (int j = 0; j <= d; ++j) {
            for (int l = 0; j + l <= d; ++l) {
                for (int r = 0; j + l + r <= d; ++r) {
                    p.add_term({j, l, r, d - j - l - r}, {u(rng), u(rng)});
                }
            }
        }
    }
    const GradedHamiltonian h(p, f);
    const std::size_t populated = h.part(3).size() + h.part(4).size();

    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < 5; ++rep) {
        const auto start = Clock::now();
        const auto r = normalize(h);
        best = std::min(best, seconds_since(start));
        if (!std::isfinite(r.D2)) {
            return {false, "non-finite D2 from the populated Hamiltonian", {}};
        }
    }

    const auto start = Clock::now();
    const rtbp::Scan scan = rtbp::scan_omega1(kReferencePoint, 1.0, 0.01, 3.0, 10000);
    const double scan_time = seconds_since(start);
    const bool pass = populated == 55 && best < 0.010 && scan_time < 1.0 && scan.rows.size() == 10000;
    return {pass,
            fmt::format("normalization with {} cubic+quartic terms {:.2f} ms (limit 10 ms); 10^4-point scan "
                        "{:.1f} ms (limit 1000 ms)",
                        populated, 1e3 * best, 1e3 * scan_time),
            {}};
}

template <class F>
Outcome guarded(F&& f)
{
    try {
        return f();
    } catch (const std::exception& e) {
        return {false, fmt::format("exception: {}", e.what()), {}};
    }
}

} // namespace

int main()
{
    report(1, "bracket algebra", guarded(bracket_algebra));
    report(2, "engine vs printed K coefficients", guarded(engine_vs_printed));
    report(3, "one-degree-of-freedom orbit oracle", guarded(one_dof_oracle));
    report(4, "numeric specialization", guarded(numeric_specialization));
    report(5, "asymptote at omega1 = 0.5", guarded(asymptote));
    report(6, "stability verdict", guarded(verdict));
    report(7, "quadratic scaling of D2", guarded(scaling));
    report(8, "performance", guarded(performance));
    fmt::print("{} of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
