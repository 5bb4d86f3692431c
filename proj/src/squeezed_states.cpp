#include "hzent/squeezed_states.hpp"

#include "hzent/errors.hpp"

#include <cmath>
#include <string>

namespace hzent {

namespace {

void require(const SqueezingParams& s, Statistics expected) {
    if(s.statistics != expected)
        throw InvalidParameter("expected " + std::string(to_string(expected)) + " squeezing parameters");
}

void check_tail_epsilon(double eps_tail) {
    if(!(eps_tail > 0.0) || eps_tail > 1e-6) throw InvalidParameter("eps_tail must lie in (0, 1e-6]");
}

} // namespace

int boson_truncation(const SqueezingParams& s, double eps_tail) {
    require(s, Statistics::boson);
    check_tail_epsilon(eps_tail);
    const double t = std::tanh(s.r);
    const double q = t * t;
    if(q == 0.0) return 0;
    const double one_minus_q = 1.0 / (std::cosh(s.r) * std::cosh(s.r));
    double tail = q / one_minus_q;
    int n_max = 0;
    while(!(tail < eps_tail)) {
        if(++n_max > kMaxOccupation)
            throw SqueezingOverflow("near-maximal squeezing: x = " + std::to_string(s.x) + " needs n_max > " +
                                    std::to_string(kMaxOccupation));
        tail *= q;
    }
    return n_max;
}

BosonSqueezedVacuum build_boson_state(const SqueezingParams& s, double eps_tail) {
    const int n_max = boson_truncation(s, eps_tail);
    const double t = std::tanh(s.r);
    const double inv_cosh = 1.0 / std::cosh(s.r);

    std::vector<PureBipartiteState::Entry> entries;
    entries.reserve(static_cast<std::size_t>(n_max) + 1);
    double amp = inv_cosh;
    for(int n = 0; n <= n_max; ++n) {
        entries.push_back({static_cast<std::size_t>(n), static_cast<std::size_t>(n), Complex{amp, 0.0}});
        amp *= t;
    }
    const double tail = std::pow(t, 2.0 * (n_max + 1)) * std::cosh(s.r) * std::cosh(s.r);
    auto basis = boson_basis(n_max);
    return {PureBipartiteState(Statistics::boson, basis, basis, std::move(entries), n_max, tail), s};
}

FermionOutHorState build_fermion_state(const SqueezingParams& s) {
    require(s, Statistics::fermion);
    const double c = std::cos(s.r);
    const double sn = std::sin(s.r);
    const double half_sin2 = std::sin(2.0 * s.r) / 2.0;
    // Basis indices: 0 = |00>, 1 = |01>, 2 = |10>, 3 = |11>.
    std::vector<PureBipartiteState::Entry> entries{
        {0, 0, Complex{c * c, 0.0}},
        {1, 2, Complex{-half_sin2, 0.0}},
        {2, 1, Complex{half_sin2, 0.0}},
        {3, 3, Complex{-sn * sn, 0.0}},
    };
    return {PureBipartiteState(Statistics::fermion, fermion_basis(), fermion_basis(), std::move(entries), 1, 0.0), s};
}

DensityOperator boson_reduced_analytic(const SqueezingParams& s, int n_max) {
    require(s, Statistics::boson);
    if(n_max < 0) throw InvalidParameter("n_max must be nonnegative");
    if(n_max > kMaxOccupation)
        throw SqueezingOverflow("near-maximal squeezing: n_max exceeds " + std::to_string(kMaxOccupation));
    // 1/cosh^2 r = 1 - tanh^2 r = 1 - e^{-2x}, evaluated without forming cosh r.
    const double q = s.boltzmann_weight * s.boltzmann_weight;
    const double one_minus_q = -std::expm1(-2.0 * s.x);
    std::vector<double> weights(static_cast<std::size_t>(n_max) + 1);
    double p = one_minus_q;
    for(auto& w : weights) {
        w = p;
        p *= q;
    }
    return DensityOperator::diagonal(Statistics::boson, boson_basis(n_max), weights);
}

DensityOperator fermion_reduced_analytic(const SqueezingParams& s) {
    require(s, Statistics::fermion);
    const double c2 = std::cos(s.r) * std::cos(s.r);
    const double s2 = std::sin(s.r) * std::sin(s.r);
    return DensityOperator::diagonal(Statistics::fermion, fermion_basis(), {c2 * c2, s2 * c2, s2 * c2, s2 * s2});
}

} // namespace hzent
