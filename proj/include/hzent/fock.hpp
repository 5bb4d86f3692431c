#pragma once

// Truncated Fock-space linear algebra for a single frequency channel: pure
// bipartite (hor x out) states, reduced density operators, spectra and
// von Neumann entropy. This is the exact oracle the closed forms are checked
// against, so it never uses the closed forms itself.

#include "hzent/collapse_geometry.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace hzent {

using Complex = std::complex<double>;

/// Hard cap on the bosonic truncation n_max (and hence on matrix dimensions).
inline constexpr int kMaxOccupation = 16384;
/// Eigenvalues below this are treated as exact zeros in -lambda log2 lambda.
inline constexpr double kEigenvalueFloor = 1e-30;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kPositivityTolerance = 1e-10;
inline constexpr double kDiagonalTolerance = 1e-10;

/// Occupation of one subsystem at one frequency. Bosons use `particle` as the
/// occupation number n and keep `antiparticle` at 0; fermions carry one bit each
/// in (particle, antiparticle) order.
struct OccupationLabel {
    int particle = 0;
    int antiparticle = 0;

    friend bool operator==(const OccupationLabel&, const OccupationLabel&) = default;
};

/// The fermionic single-frequency basis |00>, |01>, |10>, |11>.
std::vector<OccupationLabel> fermion_basis();
/// The bosonic basis |0>, ..., |n_max>.
std::vector<OccupationLabel> boson_basis(int n_max);

enum class Subsystem { out, hor };

class PureBipartiteState {
public:
    /// One nonzero amplitude, addressed by indices into the hor and out bases.
    struct Entry {
        std::size_t hor;
        std::size_t out;
        Complex amplitude;
    };

    /// Validates label shapes, index ranges and normalization:
    /// 1 - tail_bound - 1e-12 <= sum |a|^2 <= 1 + 1e-12.
    PureBipartiteState(Statistics statistics, std::vector<OccupationLabel> hor_basis,
                       std::vector<OccupationLabel> out_basis, std::vector<Entry> entries, int n_max,
                       double tail_bound);

    Statistics statistics() const noexcept { return statistics_; }
    const std::vector<OccupationLabel>& hor_basis() const noexcept { return hor_basis_; }
    const std::vector<OccupationLabel>& out_basis() const noexcept { return out_basis_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    int n_max() const noexcept { return n_max_; }
    double tail_bound() const noexcept { return tail_bound_; }

    /// Amplitude of |hor>|out>; zero for labels without an entry.
    Complex amplitude(const OccupationLabel& hor, const OccupationLabel& out) const;
    double norm_squared() const;

private:
    Statistics statistics_;
    std::vector<OccupationLabel> hor_basis_;
    std::vector<OccupationLabel> out_basis_;
    std::vector<Entry> entries_;
    int n_max_;
    double tail_bound_;
};

class DensityOperator {
public:
    /// Checks Hermiticity (1e-12) and trace in [1 - max(1e-9, trace_deficit), 1 + 1e-12].
    /// `trace_deficit` admits mass lost to a declared truncation tail.
    /// Positivity is checked where the spectrum is computed.
    DensityOperator(Statistics statistics, std::vector<OccupationLabel> basis, Eigen::MatrixXcd matrix,
                    double trace_deficit = 0.0);

    static DensityOperator diagonal(Statistics statistics, std::vector<OccupationLabel> basis,
                                    const std::vector<double>& weights, double trace_deficit = 0.0);

    Statistics statistics() const noexcept { return statistics_; }
    const std::vector<OccupationLabel>& basis() const noexcept { return basis_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    double trace() const;
    std::vector<double> diagonal_entries() const;
    /// Frobenius norm of the off-diagonal part.
    double offdiag_norm() const;
    /// Largest |rho_ij| with i != j.
    double offdiag_max() const;

private:
    Statistics statistics_;
    std::vector<OccupationLabel> basis_;
    Eigen::MatrixXcd matrix_;
};

/// rho_keep = tr_other |psi><psi|. The trace may fall short of 1 by up to the
/// state's tail bound.
DensityOperator partial_trace(const PureBipartiteState& state, Subsystem keep);

/// Ascending eigenvalues of a Hermitian operator.
Eigen::VectorXd spectrum(const DensityOperator& rho);

enum class EntropyPath {
    automatic, ///< diagonal shortcut when all off-diagonal entries are exactly zero
    eigen,     ///< always diagonalize
    diagonal,  ///< trust the diagonal; throws if off-diagonal mass exceeds 1e-10
};

/// -sum lambda log2 lambda in bits. Throws InvalidDensityOperator if an
/// eigenvalue (or diagonal entry on the shortcut) is below -1e-10.
double von_neumann_entropy(const DensityOperator& rho, EntropyPath path = EntropyPath::automatic);

/// Tr(rho^2).
double purity(const DensityOperator& rho);

enum class OccupationComponent { particle, antiparticle, total };

/// sum_n n p(n) for the chosen component. Requires an operator diagonal in
/// the occupation basis; bosons have no antiparticle component.
double mean_occupation(const DensityOperator& rho, OccupationComponent which);

/// Tr(rho^2) / (Tr rho)^2 for |psi><psi| on the support of the stored
/// amplitudes. The normalization removes the mass lost to truncation.
double global_purity(const PureBipartiteState& state);

} // namespace hzent
