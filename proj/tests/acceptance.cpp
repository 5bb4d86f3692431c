// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "cli.hpp"

#include "hzent/collapse_geometry.hpp"
#include "hzent/entanglement.hpp"
#include "hzent/fock.hpp"
#include "hzent/serialization.hpp"
#include "hzent/squeezed_states.hpp"

#include "oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace hzent;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Boson closed form vs truncated-Fock oracle.
Outcome boson_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for(double x : {0.2, 0.3, 0.5, 1.0, 2.0, 5.0}) {
        const auto s = squeezing_from_x(x, Statistics::boson);
        const auto rho = partial_trace(build_boson_state(s, 1e-14).state, Subsystem::out);
        worst = std::max(worst, std::abs(boson_entropy(s) - von_neumann_entropy(rho, EntropyPath::eigen)));
    }
    const double elapsed = seconds_since(t0);
    return {worst < 1e-9 && elapsed < 1.0, "max gap " + fmt(worst) + " bits (< 1e-9), " + fmt(elapsed) + " s (< 1)"};
}

// 2. Fermion closed form vs 4x4 oracle at random squeezing.
Outcome fermion_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2010);
    std::uniform_real_distribution<double> u(0.0, std::numbers::pi / 4.0);
    double worst = 0.0;
    for(int i = 0; i < 20; ++i) {
        double r = u(rng);
        while(r == 0.0) r = u(rng);
        const auto s = squeezing_from_r(r, Statistics::fermion);
        const auto rho = partial_trace(build_fermion_state(s).state, Subsystem::out);
        worst = std::max(worst, std::abs(fermion_entropy(s) - von_neumann_entropy(rho, EntropyPath::eigen)));
    }
    const double elapsed = seconds_since(t0);
    return {worst < 1e-12 && elapsed < 0.1, "max gap " + fmt(worst) + " bits (< 1e-12), " + fmt(elapsed) + " s (< 0.1)"};
}

// 3. Reduced states are thermal at T_H = 1/(8 pi m).
Outcome thermality() {
    double boson_t = 0.0, fermion_t = 0.0, be = 0.0, fd = 0.0;
    for(double x : {0.5, 1.0, 2.0}) {
        const auto b = entropy_report(x, Statistics::boson, 1.0);
        const auto f = entropy_report(x, Statistics::fermion, 1.0);
        boson_t = std::max(boson_t, std::abs(b.fitted_temperature_ratio - 1.0));
        fermion_t = std::max(fermion_t, std::abs(f.fitted_temperature_ratio - 1.0));
        const double n_be = 1.0 / std::expm1(2.0 * x);
        const double n_fd = 1.0 / (std::exp(2.0 * x) + 1.0);
        be = std::max(be, std::abs(b.mean_occupation - n_be) / n_be);
        fd = std::max(fd, std::abs(f.mean_occupation - n_fd) / n_fd);
    }
    const bool pass = boson_t <= 1e-6 && fermion_t <= 1e-12 && be < 1e-9 && fd < 1e-9;
    return {pass, "|T/T_H - 1| boson " + fmt(boson_t) + " (<= 1e-6), fermion " + fmt(fermion_t) +
                      " (<= 1e-12); occupation rel. error BE " + fmt(be) + ", FD " + fmt(fd) + " (< 1e-9)"};
}

// 4. Fermionic entropy never exceeds 2 and approaches it as x -> 0.
Outcome fermion_bound() {
    double peak = 0.0;
    for(double x : oracle::log_grid(1e-9, 50.0, 1000)) peak = std::max(peak, fermion_entropy(x));
    const double near_zero = fermion_entropy(1e-6);
    return {peak <= 2.0 && near_zero > 1.9999,
            "max on 1000-point grid " + format_double(peak) + " (<= 2), S_f(1e-6) = " + format_double(near_zero) +
                " (> 1.9999)"};
}

// 5. Bosonic entropy is unbounded.
Outcome boson_unbounded() {
    const double closed = boson_entropy(1e-3);
    const double brute = oracle::geometric_entropy(std::exp(-2e-3));
    return {closed > 10.0 && std::abs(closed - brute) < 1e-9,
            "S_b(1e-3) = " + std::to_string(closed) + " (> 10), brute-force gap " + fmt(std::abs(closed - brute))};
}

// 6. Shape of the boson/fermion comparison curves and the crossover.
Outcome figure_shape() {
    const auto xs = oracle::log_grid(0.05, 5.0, 200);
    const Statistics both[] = {Statistics::boson, Statistics::fermion};
    const auto points = sweep_x(1.0, xs, both);
    bool decreasing = true;
    int changes = 0;
    std::pair<double, double> cell{0.0, 0.0};
    for(std::size_t i = 0; i < xs.size(); ++i) {
        const auto& b = points[2 * i];
        const auto& f = points[2 * i + 1];
        if(!b.report || !f.report) return {false, "sweep point failed at x = " + std::to_string(xs[i])};
        if(i == 0) continue;
        const auto& pb = *points[2 * i - 2].report;
        const auto& pf = *points[2 * i - 1].report;
        decreasing = decreasing && b.report->entropy_closed_form < pb.entropy_closed_form &&
                     f.report->entropy_closed_form < pf.entropy_closed_form &&
                     b.report->entropy_numerical < pb.entropy_numerical &&
                     f.report->entropy_numerical < pf.entropy_numerical;
        const double prev = pf.entropy_closed_form - pb.entropy_closed_form;
        const double cur = f.report->entropy_closed_form - b.report->entropy_closed_form;
        if((prev < 0.0) != (cur < 0.0)) {
            ++changes;
            cell = {xs[i - 1], xs[i]};
        }
    }
    const auto c = crossover();
    const bool inside = c.x_star >= cell.first && c.x_star <= cell.second;
    return {decreasing && changes == 1 && inside && std::abs(c.residual) < 1e-8,
            std::string(decreasing ? "both curves strictly decreasing" : "NOT monotone") + ", sign changes " +
                std::to_string(changes) + ", x* = " + std::to_string(c.x_star) + " in [" + std::to_string(cell.first) +
                ", " + std::to_string(cell.second) + "], residual " + fmt(c.residual)};
}

// 7. Global purity and equal entropies on both sides of the cut.
Outcome purity_and_schmidt() {
    double purity_gap = 0.0, schmidt_gap = 0.0;
    for(double x : oracle::log_grid(0.05, 5.0, 25)) {
        const auto b = build_boson_state(squeezing_from_x(x, Statistics::boson)).state;
        const auto f = build_fermion_state(squeezing_from_x(x, Statistics::fermion)).state;
        for(const auto* st : {&b, &f}) {
            purity_gap = std::max(purity_gap, std::abs(global_purity(*st) - 1.0));
            schmidt_gap = std::max(schmidt_gap, std::abs(von_neumann_entropy(partial_trace(*st, Subsystem::out)) -
                                                         von_neumann_entropy(partial_trace(*st, Subsystem::hor))));
        }
    }
    return {purity_gap < 1e-9 && schmidt_gap < 1e-9,
            "|Tr rho^2 - 1| " + fmt(purity_gap) + ", |S_out - S_hor| " + fmt(schmidt_gap) + " (both < 1e-9)"};
}

std::string run_cli(std::vector<std::string> args, int& code) {
    args.insert(args.begin(), "hzent");
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

// 8. Everything depends on m and omega only through m * omega.
Outcome scale_invariance() {
    bool identical = true;
    for(double m : {0.5, 1.0, 3.0})
        for(double w : {0.005, 0.03, 0.2})
            for(auto st : {Statistics::boson, Statistics::fermion}) {
                const auto a = entropy_report(BlackHoleParams(m), ModeChannel(w, st));
                const auto b = entropy_report(BlackHoleParams(2.0 * m), ModeChannel(w / 2.0, st));
                // Compare the emitted x and report columns, which must agree digit for digit.
                const SweepPoint pa{w, a.x, st, a, {}};
                const SweepPoint pb{w, b.x, st, b, {}};
                identical = identical && csv_row(pa, 1.0) == csv_row(pb, 1.0);
            }

    double omega_half = 0, omega_one = 0, omega_two = 0;
    for(auto [m, target] : {std::pair{"0.5", &omega_half}, std::pair{"1", &omega_one}, std::pair{"2", &omega_two}}) {
        int code = 0;
        const auto text = run_cli({"crossover", "--mass", m, "--format", "json"}, code);
        if(code != 0) return {false, "crossover CLI failed"};
        *target = nlohmann::json::parse(text)["omega_star"].get<double>();
    }
    const bool scales = omega_half == 2.0 * omega_one && omega_two == 0.5 * omega_one;
    return {identical && scales, std::string(identical ? "reports identical" : "reports DIFFER") +
                                     " for (m, w) vs (2m, w/2); omega* x m = " + std::to_string(omega_half * 0.5) +
                                     ", " + std::to_string(omega_one) + ", " + std::to_string(omega_two * 2.0)};
}

// 9. Byte-identical CLI output for a repeated sweep.
Outcome cli_determinism() {
    const std::vector<std::string> args{"sweep", "--x-min", "0.05", "--x-max", "5", "--points", "200", "--stats", "both"};
    int c1 = 0, c2 = 0;
    const auto a = run_cli(args, c1);
    const auto b = run_cli(args, c2);
    const bool header = a.substr(0, a.find('\n')) == kCsvHeader;
    return {c1 == 0 && c2 == 0 && a == b && header,
            std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "DIFFERENT") + ", header " +
                (header ? "matches" : "MISMATCH")};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"boson oracle equivalence", boson_oracle},
        {"fermion oracle equivalence", fermion_oracle},
        {"thermality at the Hawking temperature", thermality},
        {"fermionic bound and maximal limit", fermion_bound},
        {"bosonic unboundedness", boson_unbounded},
        {"boson/fermion curve shape and crossover", figure_shape},
        {"purity and Schmidt symmetry", purity_and_schmidt},
        {"scale invariance", scale_invariance},
        {"CLI determinism", cli_determinism},
    };
    int failures = 0;
    for(std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch(const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
