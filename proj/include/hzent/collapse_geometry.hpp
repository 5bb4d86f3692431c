#pragma once

// Collapse parameters (Vaidya shockwave of mass m at ingoing time v0) and the
// quantities derived from them. Natural units throughout: G = c = hbar = k_B = 1.

#include <string_view>

namespace hzent {

enum class Statistics { boson, fermion };

std::string_view to_string(Statistics s);
/// Parses "boson" / "fermion"; throws InvalidParameter otherwise.
Statistics statistics_from_string(std::string_view s);

/// Default floor on x = 4 pi m omega for state-construction paths.
inline constexpr double kDefaultXMin = 1e-6;

class BlackHoleParams {
public:
    /// Throws InvalidParameter unless mass > 0 and v0 is finite.
    explicit BlackHoleParams(double mass, double v0 = 0.0);

    double mass() const noexcept { return mass_; }
    double v0() const noexcept { return v0_; }

private:
    double mass_;
    double v0_;
};

class ModeChannel {
public:
    /// Throws InvalidParameter unless omega > 0 and finite.
    ModeChannel(double omega, Statistics statistics);

    double omega() const noexcept { return omega_; }
    Statistics statistics() const noexcept { return statistics_; }

private:
    double omega_;
    Statistics statistics_;
};

/// Bogoliubov squeezing of one frequency channel.
///
/// For bosons `r` satisfies tanh r = e^{-x}; for fermions tan r = e^{-x}, so
/// r lies in [0, pi/4). `boltzmann_weight` caches e^{-x} and is the single
/// source both relations are evaluated from. It underflows to 0 (and r to 0)
/// for x beyond ~745, which is the exact vacuum to double precision.
struct SqueezingParams {
    Statistics statistics;
    double r;
    double x;
    double boltzmann_weight;
};

/// Last ingoing null ray that reaches future null infinity: v_H = v0 - 4m.
double horizon_formation(const BlackHoleParams& p) noexcept;

/// T_H = 1 / (8 pi m).
double hawking_temperature(const BlackHoleParams& p);

/// x = 4 pi m omega, the only combination the entropies depend on.
double dimensionless_x(const BlackHoleParams& p, const ModeChannel& c) noexcept;

/// Squeezing for a given x. Throws InvalidParameter for x <= 0 or NaN and
/// SqueezingOverflow for x < x_min.
SqueezingParams squeezing_from_x(double x, Statistics statistics, double x_min = kDefaultXMin);

/// Inverse route: squeezing parameter given r directly (x = -ln tanh r or -ln tan r).
/// Bosons need r > 0, fermions r in (0, pi/4). No x_min floor is applied.
SqueezingParams squeezing_from_r(double r, Statistics statistics);

SqueezingParams squeezing_for(const BlackHoleParams& p, const ModeChannel& c,
                              double x_min = kDefaultXMin);

} // namespace hzent
