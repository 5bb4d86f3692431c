#include "hzent/collapse_geometry.hpp"

#include "hzent/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hzent {

std::string_view to_string(Statistics s) {
    return s == Statistics::boson ? "boson" : "fermion";
}

Statistics statistics_from_string(std::string_view s) {
    if(s == "boson") return Statistics::boson;
    if(s == "fermion") return Statistics::fermion;
    throw InvalidParameter("unknown statistics '" + std::string(s) + "' (expected boson or fermion)");
}

BlackHoleParams::BlackHoleParams(double mass, double v0) : mass_(mass), v0_(v0) {
    if(!(mass > 0.0) || !std::isfinite(mass))
        throw InvalidParameter("black hole mass must be positive and finite, got " + std::to_string(mass));
    if(!std::isfinite(v0)) throw InvalidParameter("shockwave time v0 must be finite");
}

ModeChannel::ModeChannel(double omega, Statistics statistics) : omega_(omega), statistics_(statistics) {
    if(!(omega > 0.0) || !std::isfinite(omega))
        throw InvalidParameter("mode frequency must be positive and finite, got " + std::to_string(omega));
}

double horizon_formation(const BlackHoleParams& p) noexcept { return p.v0() - 4.0 * p.mass(); }

double hawking_temperature(const BlackHoleParams& p) {
    return 1.0 / (8.0 * std::numbers::pi * p.mass());
}

double dimensionless_x(const BlackHoleParams& p, const ModeChannel& c) noexcept {
    return 4.0 * std::numbers::pi * p.mass() * c.omega();
}

SqueezingParams squeezing_from_x(double x, Statistics statistics, double x_min) {
    if(!(x > 0.0)) throw InvalidParameter("x = 4 pi m omega must be positive, got " + std::to_string(x));
    if(x < x_min)
        throw SqueezingOverflow("near-maximal squeezing: x = " + std::to_string(x) + " is below the floor x_min = " +
                                std::to_string(x_min));
    const double w = std::exp(-x);
    const double r = statistics == Statistics::boson ? std::atanh(w) : std::atan(w);
    return {statistics, r, x, w};
}

SqueezingParams squeezing_from_r(double r, Statistics statistics) {
    if(statistics == Statistics::boson) {
        if(!(r > 0.0) || !std::isfinite(r)) throw InvalidParameter("bosonic squeezing r must be positive and finite");
        const double w = std::tanh(r);
        if(!(w < 1.0)) throw SqueezingOverflow("bosonic squeezing r too large: tanh r rounds to 1");
        return {statistics, r, -std::log(w), w};
    }
    if(!(r > 0.0) || !(r < std::numbers::pi / 4.0))
        throw InvalidParameter("fermionic squeezing r must lie in (0, pi/4)");
    const double w = std::tan(r);
    return {statistics, r, -std::log(w), w};
}

SqueezingParams squeezing_for(const BlackHoleParams& p, const ModeChannel& c, double x_min) {
    return squeezing_from_x(dimensionless_x(p, c), c.statistics(), x_min);
}

} // namespace hzent
