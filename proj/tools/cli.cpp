#include "cli.hpp"

#include "hzent/collapse_geometry.hpp"
#include "hzent/entanglement.hpp"
#include "hzent/errors.hpp"
#include "hzent/serialization.hpp"
#include "hzent/squeezed_states.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

namespace hzent::cli {

namespace {

struct RunConfig {
    double mass = 1.0;
    std::optional<double> omega;
    std::optional<double> x;
    double omega_min = 0.0;
    double omega_max = 0.0;
    std::optional<double> x_grid_min;
    std::optional<double> x_grid_max;
    int points = 200;
    std::string grid = "log";
    std::string statistics = "both";
    double eps_tail = kDefaultTailEpsilon;
    double x_floor = kDefaultXMin;
    std::string format = "csv";
    std::string output_path;
    double tol = kCrossoverTolerance;
    double lo = 0.1;
    double hi = 1.0;
};

std::vector<Statistics> parse_statistics(const std::string& s) {
    if(s == "both") return {Statistics::boson, Statistics::fermion};
    return {statistics_from_string(s)};
}

void validate_eps_tail(double eps_tail) {
    if(!(eps_tail > 0.0) || eps_tail > 1e-6) throw InvalidParameter("--eps-tail must lie in (0, 1e-6]");
}

std::vector<double> make_grid(double lo, double hi, int points, bool log_grid) {
    if(points < 1) throw InvalidParameter("--points must be at least 1");
    if(!(lo > 0.0) || !std::isfinite(hi)) throw InvalidParameter("grid bounds must be positive and finite");
    if(points == 1) return {lo};
    if(!(lo < hi)) throw InvalidParameter("grid minimum must be below the maximum when --points > 1");
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double n = points - 1;
    for(int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] =
            log_grid ? lo * std::pow(hi / lo, i / n) : lo + (hi - lo) * (i / n);
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if(cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if(!file) throw InvalidParameter("cannot open output file " + cfg.output_path);
    file << text;
}

ReportOptions report_options(const RunConfig& cfg) {
    validate_eps_tail(cfg.eps_tail);
    ReportOptions options;
    options.eps_tail = cfg.eps_tail;
    options.x_min = cfg.x_floor;
    return options;
}

/// x from --x or from --mass/--omega.
double single_x(const RunConfig& cfg, const BlackHoleParams& p) {
    if(cfg.x) {
        if(!(*cfg.x > 0.0)) throw InvalidParameter("--x must be positive");
        return *cfg.x;
    }
    if(!cfg.omega) throw InvalidParameter("one of --omega or --x is required");
    return dimensionless_x(p, ModeChannel(*cfg.omega, Statistics::boson));
}

int cmd_entropy(const RunConfig& cfg, std::ostream& out) {
    const BlackHoleParams p(cfg.mass);
    const auto stats = parse_statistics(cfg.statistics);
    const auto options = report_options(cfg);
    const double x = single_x(cfg, p);

    std::vector<SweepPoint> points;
    for(Statistics st : stats) {
        const EntropyReport report = cfg.x ? entropy_report(x, st, p.mass(), options)
                                           : entropy_report(p, ModeChannel(*cfg.omega, st), options);
        points.push_back({report.omega, report.x, st, report, {}});
    }
    emit(cfg, format_points(points, p.mass(), cfg.format == "json"), out);
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const BlackHoleParams p(cfg.mass);
    const auto stats = parse_statistics(cfg.statistics);
    const auto options = report_options(cfg);
    const bool log_grid = cfg.grid == "log";

    std::vector<SweepPoint> points;
    if(cfg.x_grid_min || cfg.x_grid_max) {
        if(!cfg.x_grid_min || !cfg.x_grid_max) throw InvalidParameter("--x-min and --x-max go together");
        const auto xs = make_grid(*cfg.x_grid_min, *cfg.x_grid_max, cfg.points, log_grid);
        points = sweep_x(p.mass(), xs, stats, options);
    } else {
        const auto omegas = make_grid(cfg.omega_min, cfg.omega_max, cfg.points, log_grid);
        points = sweep(p, omegas, stats, options);
    }

    emit(cfg, format_points(points, p.mass(), cfg.format == "json"), out);
    const bool any_ok = std::any_of(points.begin(), points.end(), [](const SweepPoint& sp) { return sp.report.has_value(); });
    if(!any_ok) {
        err << "error: every sweep point failed\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_crossover(const RunConfig& cfg, std::ostream& out) {
    const BlackHoleParams p(cfg.mass);
    const CrossoverResult result = crossover(cfg.tol, cfg.lo, cfg.hi);
    const double omega_star = result.x_star / (4.0 * std::numbers::pi * p.mass());
    std::string text;
    if(cfg.format == "json") {
        text = "{\"x_star\":" + format_double(result.x_star) + ",\"omega_star\":" + format_double(omega_star) +
               ",\"mass\":" + format_double(p.mass()) + ",\"residual\":" + format_double(result.residual) +
               ",\"iterations\":" + std::to_string(result.iterations) +
               ",\"bracket\":[" + format_double(result.bracket.first) + "," + format_double(result.bracket.second) +
               "],\"scan_sign_changes\":" + std::to_string(result.scan_sign_changes) + "}\n";
    } else {
        text = "x_star,omega_star,mass,residual,iterations,bracket_lo,bracket_hi,scan_sign_changes\n" +
               format_double(result.x_star) + "," + format_double(omega_star) + "," + format_double(p.mass()) + "," +
               format_double(result.residual) + "," + std::to_string(result.iterations) + "," +
               format_double(result.bracket.first) + "," + format_double(result.bracket.second) + "," +
               std::to_string(result.scan_sign_changes) + "\n";
    }
    emit(cfg, text, out);
    return kExitOk;
}

int cmd_state(const RunConfig& cfg, bool with_spectrum, std::ostream& out) {
    const BlackHoleParams p(cfg.mass);
    if(cfg.statistics == "both") throw InvalidParameter("state needs --stats boson or --stats fermion");
    const Statistics statistics = statistics_from_string(cfg.statistics);
    const auto options = report_options(cfg);
    const double x = single_x(cfg, p);
    const SqueezingParams s = squeezing_from_x(x, statistics, options.x_min);

    const DensityOperator rho = statistics == Statistics::boson
                                    ? partial_trace(build_boson_state(s, options.eps_tail).state, Subsystem::out)
                                    : partial_trace(build_fermion_state(s).state, Subsystem::out);

    std::vector<std::pair<std::string, std::string>> extra;
    if(with_spectrum) {
        const double omega = cfg.omega && !cfg.x ? *cfg.omega : x / (4.0 * std::numbers::pi * p.mass());
        const double occupation = statistics == Statistics::boson
                                      ? mean_occupation(rho, OccupationComponent::total)
                                      : mean_occupation(rho, OccupationComponent::particle);
        const double thermal = statistics == Statistics::boson ? bose_einstein_occupation(x) : fermi_dirac_occupation(x);
        const auto number = [](double v) { return std::isfinite(v) ? format_double(v) : std::string("null"); };
        extra = {{"mass", number(p.mass())},
                 {"omega", number(omega)},
                 {"hawking_temperature", number(hawking_temperature(p))},
                 {"mean_occupation", number(occupation)},
                 {"thermal_occupation", number(thermal)},
                 {"fitted_temperature_ratio", number(fitted_temperature_ratio(rho, x))}};
    }
    emit(cfg, density_to_json(rho, StateHeader{statistics, s.r, s.x}, extra), out);
    return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--mass", cfg.mass, "black hole mass m (natural units)")->capture_default_str();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--output", cfg.output_path, "write to this file instead of standard output");
}

void add_numeric(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--eps-tail", cfg.eps_tail, "bound on the discarded bosonic tail, in (0, 1e-6]")->capture_default_str();
    sub->add_option("--x-floor", cfg.x_floor, "smallest x accepted for state construction")->capture_default_str();
}

void add_single_mode(CLI::App* sub, RunConfig& cfg) {
    auto* omega = sub->add_option("--omega", cfg.omega, "mode frequency");
    auto* x = sub->add_option("--x", cfg.x, "expert override: x = 4 pi m omega directly");
    omega->excludes(x);
    x->excludes(omega);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Entanglement between Hawking radiation and horizon modes in gravitational collapse"};
    app.name("hzent");
    app.require_subcommand(1);

    auto* entropy = app.add_subcommand("entropy", "closed-form and oracle entropy for one frequency");
    add_common(entropy, cfg);
    add_numeric(entropy, cfg);
    add_single_mode(entropy, cfg);
    entropy->add_option("--stats", cfg.statistics)->check(CLI::IsMember({"boson", "fermion", "both"}))->capture_default_str();

    auto* sweep_cmd = app.add_subcommand("sweep", "entropy table over a frequency grid");
    add_common(sweep_cmd, cfg);
    add_numeric(sweep_cmd, cfg);
    sweep_cmd->add_option("--omega-min", cfg.omega_min, "lowest frequency");
    sweep_cmd->add_option("--omega-max", cfg.omega_max, "highest frequency");
    sweep_cmd->add_option("--x-min", cfg.x_grid_min, "expert override: lowest x (replaces the omega grid)");
    sweep_cmd->add_option("--x-max", cfg.x_grid_max, "expert override: highest x");
    sweep_cmd->add_option("--points", cfg.points, "number of grid points")->capture_default_str();
    sweep_cmd->add_option("--grid", cfg.grid)->check(CLI::IsMember({"linear", "log"}))->capture_default_str();
    sweep_cmd->add_option("--stats", cfg.statistics)->check(CLI::IsMember({"boson", "fermion", "both"}))->capture_default_str();

    auto* cross = app.add_subcommand("crossover", "x and omega where fermionic entanglement overtakes bosonic");
    add_common(cross, cfg);
    cross->add_option("--tol", cfg.tol, "bisection tolerance in x")->capture_default_str();
    cross->add_option("--lo", cfg.lo, "lower end of the x bracket")->capture_default_str();
    cross->add_option("--hi", cfg.hi, "upper end of the x bracket")->capture_default_str();

    auto* state = app.add_subcommand("state", "reduced density operator of the radiation mode as JSON");
    auto* spectrum_cmd = app.add_subcommand("spectrum", "state plus occupation and temperature fit");
    for(auto* sub : {state, spectrum_cmd}) {
        sub->add_option("--mass", cfg.mass, "black hole mass m (natural units)")->capture_default_str();
        sub->add_option("--output", cfg.output_path, "write to this file instead of standard output");
        add_numeric(sub, cfg);
        add_single_mode(sub, cfg);
        sub->add_option("--stats", cfg.statistics)->check(CLI::IsMember({"boson", "fermion"}))->required();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if(!reversed.empty()) reversed.pop_back();
        app.parse(reversed);
    } catch(const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidArguments;
    }

    try {
        if(entropy->parsed()) return cmd_entropy(cfg, out);
        if(sweep_cmd->parsed()) return cmd_sweep(cfg, out, err);
        if(cross->parsed()) return cmd_crossover(cfg, out);
        if(state->parsed()) return cmd_state(cfg, false, out);
        if(spectrum_cmd->parsed()) return cmd_state(cfg, true, out);
    } catch(const InvalidParameter& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidArguments;
    } catch(const SqueezingOverflow& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch(const NoSignChange& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch(const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitInvalidArguments;
}

} // namespace hzent::cli
