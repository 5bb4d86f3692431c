#include "hzent/entanglement.hpp"

#include "hzent/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace hzent {

namespace {

constexpr double kFitProbabilityFloor = 1e-15;

void check_x(double x) {
    if(!(x > 0.0)) throw InvalidParameter("x = 4 pi m omega must be positive, got " + std::to_string(x));
}

double plog2p(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

} // namespace

double boson_entropy(double x) {
    check_x(x);
    // -log2(1 - q) + (q / (1 - q)) * 2x / ln 2, q = e^{-2x}
    const double one_minus_q = -std::expm1(-2.0 * x);
    const double occupation = 1.0 / std::expm1(2.0 * x);
    const double s = -std::log2(one_minus_q) + occupation * 2.0 * x / std::numbers::ln2;
    return std::max(s, 0.0);
}

double boson_entropy(const SqueezingParams& s) {
    if(s.statistics != Statistics::boson) throw InvalidParameter("boson_entropy needs bosonic squeezing");
    return boson_entropy(s.x);
}

double fermion_entropy(double x) {
    check_x(x);
    const double l = std::log1p(std::exp(-2.0 * x));
    const double s2 = 1.0 / (1.0 + std::exp(2.0 * x));
    const double c2 = 1.0 / (1.0 + std::exp(-2.0 * x));
    const double h2 = s2 * (2.0 * x + l) / std::numbers::ln2 + c2 * l / std::numbers::ln2;
    return std::clamp(2.0 * h2, 0.0, 2.0);
}

double fermion_entropy(const SqueezingParams& s) {
    if(s.statistics != Statistics::fermion) throw InvalidParameter("fermion_entropy needs fermionic squeezing");
    return fermion_entropy(s.x);
}

double boson_entropy_hyperbolic(double r) {
    const double ch2 = std::cosh(r) * std::cosh(r);
    const double sh2 = std::sinh(r) * std::sinh(r);
    return -plog2p(ch2) + plog2p(sh2);
}

double fermion_entropy_trigonometric(double r) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    return 2.0 * (plog2p(c2) + plog2p(s2));
}

double bose_einstein_occupation(double x) { return 1.0 / std::expm1(2.0 * x); }

double fermi_dirac_occupation(double x) { return 1.0 / (std::exp(2.0 * x) + 1.0); }

double fitted_temperature_ratio(const DensityOperator& rho, double x) {
    check_x(x);
    const auto p = rho.diagonal_entries();
    if(rho.statistics() == Statistics::fermion) {
        double excited = 0.0;
        double ground = 0.0;
        for(std::size_t i = 0; i < p.size(); ++i) (rho.basis()[i].particle == 1 ? excited : ground) += p[i];
        if(!(excited > 0.0) || !(ground > 0.0)) return nan();
        return 2.0 * x / -std::log(excited / ground);
    }

    // ln p(n) = ln(1 - q) + n ln q; the slope is -omega / T.
    double sn = 0.0, sy = 0.0, snn = 0.0, sny = 0.0;
    int count = 0;
    for(std::size_t i = 0; i < p.size(); ++i) {
        if(!(p[i] > kFitProbabilityFloor)) continue;
        const double n = rho.basis()[i].particle;
        const double y = std::log(p[i]);
        sn += n;
        sy += y;
        snn += n * n;
        sny += n * y;
        ++count;
    }
    if(count < 2) return nan();
    const double slope = (count * sny - sn * sy) / (count * snn - sn * sn);
    return 2.0 * x / -slope;
}

EntropyReport entropy_report(double x, Statistics statistics, double mass, const ReportOptions& options) {
    const SqueezingParams s = squeezing_from_x(x, statistics, options.x_min);

    EntropyReport report{};
    report.x = x;
    report.mass = mass;
    report.omega = x / (4.0 * std::numbers::pi * mass);
    report.statistics = statistics;

    if(statistics == Statistics::boson) {
        const auto state = build_boson_state(s, options.eps_tail);
        const DensityOperator rho = partial_trace(state.state, options.keep);
        report.entropy_closed_form = boson_entropy(s);
        report.entropy_numerical = von_neumann_entropy(rho);
        report.mean_occupation = mean_occupation(rho, OccupationComponent::total);
        report.fitted_temperature_ratio = fitted_temperature_ratio(rho, x);
    } else {
        const auto state = build_fermion_state(s);
        const DensityOperator rho = partial_trace(state.state, options.keep);
        report.entropy_closed_form = fermion_entropy(s);
        report.entropy_numerical = von_neumann_entropy(rho);
        report.mean_occupation = mean_occupation(rho, OccupationComponent::particle);
        report.fitted_temperature_ratio = fitted_temperature_ratio(rho, x);
    }
    report.abs_gap = std::abs(report.entropy_closed_form - report.entropy_numerical);
    return report;
}

EntropyReport entropy_report(const BlackHoleParams& p, const ModeChannel& c, const ReportOptions& options) {
    EntropyReport report = entropy_report(dimensionless_x(p, c), c.statistics(), p.mass(), options);
    report.omega = c.omega();
    return report;
}

double entropy_difference(double x) { return fermion_entropy(x) - boson_entropy(x); }

int count_sign_changes(double lo, double hi, int points) {
    if(!(lo > 0.0) || !(hi > lo) || points < 2) throw InvalidParameter("invalid scan grid");
    const double step = std::log(hi / lo) / (points - 1);
    int changes = 0;
    double previous = entropy_difference(lo);
    for(int i = 1; i < points; ++i) {
        const double current = entropy_difference(lo * std::exp(step * i));
        if((previous < 0.0) != (current < 0.0)) ++changes;
        previous = current;
    }
    return changes;
}

CrossoverResult crossover(double tol, double lo, double hi) {
    if(!(tol > 0.0)) throw InvalidParameter("crossover tolerance must be positive");
    if(!(lo > 0.0) || !(hi > lo)) throw InvalidParameter("crossover bracket must satisfy 0 < lo < hi");

    double f_lo = entropy_difference(lo);
    const double f_hi = entropy_difference(hi);
    if((f_lo < 0.0) == (f_hi < 0.0))
        throw NoSignChange("S_fermion - S_boson has the same sign at x = " + std::to_string(lo) + " and x = " +
                           std::to_string(hi));

    constexpr int kMaxIterations = 200;
    int iterations = 0;
    double mid = 0.5 * (lo + hi);
    double f_mid = entropy_difference(mid);
    while((hi - lo >= tol || std::abs(f_mid) >= tol) && iterations < kMaxIterations) {
        if((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        const double next = 0.5 * (lo + hi);
        ++iterations;
        if(next == lo || next == hi) break;
        mid = next;
        f_mid = entropy_difference(mid);
    }
    return {mid, {lo, hi}, f_mid, iterations, count_sign_changes()};
}

std::vector<SweepPoint> sweep_x(double mass, std::span<const double> xs, std::span<const Statistics> statistics,
                                const ReportOptions& options, unsigned threads) {
    if(xs.empty()) throw InvalidParameter("sweep grid is empty");
    if(statistics.empty()) throw InvalidParameter("sweep needs at least one statistics");
    for(std::size_t i = 1; i < xs.size(); ++i)
        if(!(xs[i] > xs[i - 1])) throw InvalidParameter("sweep grid must be strictly increasing");
    if(!(mass > 0.0)) throw InvalidParameter("black hole mass must be positive");

    std::vector<SweepPoint> points;
    points.reserve(xs.size() * statistics.size());
    for(double x : xs)
        for(Statistics st : statistics) points.push_back({x / (4.0 * std::numbers::pi * mass), x, st, std::nullopt, {}});

    auto evaluate = [&](SweepPoint& point) {
        try {
            point.report = entropy_report(point.x, point.statistics, mass, options);
            point.report->omega = point.omega;
        } catch(const std::exception& e) {
            point.error = e.what();
        }
    };

    if(threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> workers;
        for(unsigned t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                for(std::size_t i = next++; i < points.size(); i = next++) evaluate(points[i]);
            });
    }
    return points;
}

std::vector<SweepPoint> sweep(const BlackHoleParams& p, std::span<const double> omegas,
                              std::span<const Statistics> statistics, const ReportOptions& options, unsigned threads) {
    std::vector<double> xs;
    xs.reserve(omegas.size());
    for(double omega : omegas) xs.push_back(dimensionless_x(p, ModeChannel(omega, Statistics::boson)));
    auto points = sweep_x(p.mass(), xs, statistics, options, threads);
    // Report the caller's frequencies verbatim rather than x / (4 pi m).
    for(std::size_t i = 0; i < points.size(); ++i) {
        const double omega = omegas[i / statistics.size()];
        points[i].omega = omega;
        if(points[i].report) points[i].report->omega = omega;
    }
    return points;
}

} // namespace hzent
