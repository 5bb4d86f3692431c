#pragma once

#include "hzent/collapse_geometry.hpp"
#include "hzent/fock.hpp"
#include "hzent/squeezed_states.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hzent {

// Closed-form entropies of entanglement in bits, keyed on x = 4 pi m omega.
//
// Boson, with q = tanh^2 r = e^{-2x}:
//   cosh^2 r log2 cosh^2 r - sinh^2 r log2 sinh^2 r = -log2(1 - q) - q/(1 - q) log2 q
// which grows without bound as x -> 0.
// Fermion, with s^2 = sin^2 r = 1/(1 + e^{2x}):
//   -2[c^2 log2 c^2 + s^2 log2 s^2] = 2 H2(s^2) <= 2.

double boson_entropy(double x);
double boson_entropy(const SqueezingParams& s);
double fermion_entropy(double x);
double fermion_entropy(const SqueezingParams& s);

/// The hyperbolic form as printed, in terms of r. Only meaningful while
/// cosh r stays moderate (x >= 0.05 or so); kept as a cross-check.
double boson_entropy_hyperbolic(double r);
/// The trigonometric form as printed, in terms of r.
double fermion_entropy_trigonometric(double r);

/// Bose-Einstein / Fermi-Dirac occupation at omega / T_H = 2x.
double bose_einstein_occupation(double x);
double fermi_dirac_occupation(double x);

struct ReportOptions {
    double eps_tail = kDefaultTailEpsilon;
    double x_min = kDefaultXMin;
    Subsystem keep = Subsystem::out;
};

struct EntropyReport {
    double x;
    double mass;
    double omega;
    Statistics statistics;
    double entropy_closed_form;
    double entropy_numerical;
    double abs_gap;
    /// Total occupation (boson) or particle-sector occupation (fermion).
    double mean_occupation;
    /// Fitted temperature over 1/(8 pi m). NaN when fewer than two occupation
    /// levels are resolvable above 1e-15.
    double fitted_temperature_ratio;
};

/// Temperature ratio from a reduced state: least-squares slope of ln p(n) vs n
/// over p(n) > 1e-15 (boson), or the exact ratio p(particle=1)/p(particle=0)
/// (fermion), compared with e^{-2x}.
double fitted_temperature_ratio(const DensityOperator& rho, double x);

/// Closed form and truncated-Fock oracle side by side. mass and omega are
/// carried for output only; everything is computed from x.
EntropyReport entropy_report(double x, Statistics statistics, double mass, const ReportOptions& options = {});
EntropyReport entropy_report(const BlackHoleParams& p, const ModeChannel& c, const ReportOptions& options = {});

/// S_fermion(x) - S_boson(x).
double entropy_difference(double x);

struct CrossoverResult {
    double x_star;
    std::pair<double, double> bracket;
    double residual;
    int iterations;
    /// Sign changes of S_f - S_b found by the log-grid uniqueness scan.
    int scan_sign_changes;
};

inline constexpr double kCrossoverTolerance = 1e-8;

/// Bisection on S_f - S_b until the bracket is narrower than tol and the
/// residual is below tol. Throws NoSignChange if [lo, hi] is not a bracket.
CrossoverResult crossover(double tol = kCrossoverTolerance, double lo = 0.1, double hi = 1.0);

/// Number of sign changes of S_f - S_b on a log grid of `points` x values in [lo, hi].
int count_sign_changes(double lo = 1e-3, double hi = 10.0, int points = 200);

/// One grid point of a sweep; exactly one of `report` / `error` is set.
struct SweepPoint {
    double omega;
    double x;
    Statistics statistics;
    std::optional<EntropyReport> report;
    std::string error;
};

/// Reports for every (omega, statistics) pair, omega-major so the statistics
/// interleave per frequency. Per-point failures are recorded, not thrown.
/// Points are evaluated on `threads` workers (0 = hardware concurrency); the
/// result order depends only on the inputs.
std::vector<SweepPoint> sweep(const BlackHoleParams& p, std::span<const double> omegas,
                              std::span<const Statistics> statistics, const ReportOptions& options = {},
                              unsigned threads = 0);

/// Same, with the grid given directly in x.
std::vector<SweepPoint> sweep_x(double mass, std::span<const double> xs, std::span<const Statistics> statistics,
                                const ReportOptions& options = {}, unsigned threads = 0);

} // namespace hzent
