#pragma once

// Asymptotic-future form of the in-vacuum at one frequency:
//   bosons:   (1/cosh r) sum_n tanh^n r |n>_hor |n>_out
//   fermions: cos^2 r |00>|00> - (sin 2r / 2)(|01>|10> - |10>|01>) - sin^2 r |11>|11>
// with hor listed first, fermionic labels in (particle, antiparticle) order.

#include "hzent/collapse_geometry.hpp"
#include "hzent/fock.hpp"

namespace hzent {

inline constexpr double kDefaultTailEpsilon = 1e-12;

struct BosonSqueezedVacuum {
    PureBipartiteState state;
    SqueezingParams squeezing;
};

struct FermionOutHorState {
    PureBipartiteState state;
    SqueezingParams squeezing;
};

/// Smallest n_max with tanh^{2(n_max+1)} r / (1 - tanh^2 r) < eps_tail.
/// Throws SqueezingOverflow when that exceeds kMaxOccupation.
int boson_truncation(const SqueezingParams& s, double eps_tail);

/// Truncated two-mode squeezed vacuum. eps_tail must lie in (0, 1e-6].
BosonSqueezedVacuum build_boson_state(const SqueezingParams& s, double eps_tail = kDefaultTailEpsilon);

FermionOutHorState build_fermion_state(const SqueezingParams& s);

/// Thermal reduced state diag((1 - q) q^n), q = tanh^2 r, n = 0..n_max.
DensityOperator boson_reduced_analytic(const SqueezingParams& s, int n_max);

/// diag(c^4, s^2 c^2, s^2 c^2, s^4) on |00>, |01>, |10>, |11>.
DensityOperator fermion_reduced_analytic(const SqueezingParams& s);

} // namespace hzent
