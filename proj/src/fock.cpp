#include "hzent/fock.hpp"

#include "hzent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace hzent {

namespace {

void check_label(Statistics statistics, const OccupationLabel& label) {
    if(statistics == Statistics::boson) {
        if(label.particle < 0 || label.particle > kMaxOccupation || label.antiparticle != 0)
            throw InvalidParameter("bosonic label must be a single occupation in [0, n_max]");
    } else if((label.particle != 0 && label.particle != 1) || (label.antiparticle != 0 && label.antiparticle != 1)) {
        throw InvalidParameter("fermionic label must be a (particle, antiparticle) bit pair");
    }
}

void check_basis(Statistics statistics, const std::vector<OccupationLabel>& basis) {
    if(basis.empty()) throw InvalidParameter("empty occupation basis");
    for(const auto& label : basis) check_label(statistics, label);
}

double xlog2x(double p) { return p > kEigenvalueFloor ? -p * std::log2(p) : 0.0; }

} // namespace

std::vector<OccupationLabel> fermion_basis() { return {{0, 0}, {0, 1}, {1, 0}, {1, 1}}; }

std::vector<OccupationLabel> boson_basis(int n_max) {
    std::vector<OccupationLabel> basis;
    basis.reserve(static_cast<std::size_t>(n_max) + 1);
    for(int n = 0; n <= n_max; ++n) basis.push_back({n, 0});
    return basis;
}

PureBipartiteState::PureBipartiteState(Statistics statistics, std::vector<OccupationLabel> hor_basis,
                                       std::vector<OccupationLabel> out_basis, std::vector<Entry> entries,
                                       int n_max, double tail_bound)
    : statistics_(statistics),
      hor_basis_(std::move(hor_basis)),
      out_basis_(std::move(out_basis)),
      entries_(std::move(entries)),
      n_max_(n_max),
      tail_bound_(tail_bound) {
    check_basis(statistics_, hor_basis_);
    check_basis(statistics_, out_basis_);
    if(statistics_ == Statistics::fermion && n_max_ != 1) throw InvalidParameter("fermionic states have n_max = 1");
    if(n_max_ < 0 || n_max_ > kMaxOccupation) throw InvalidParameter("n_max out of range");
    if(!(tail_bound_ >= 0.0)) throw InvalidParameter("tail bound must be nonnegative");
    for(const auto& e : entries_) {
        if(e.hor >= hor_basis_.size() || e.out >= out_basis_.size())
            throw InvalidParameter("state entry addresses a label outside the basis");
    }
    const double n2 = norm_squared();
    if(n2 > 1.0 + kNormTolerance || n2 < 1.0 - tail_bound_ - kNormTolerance)
        throw InvalidParameter("state not normalized: sum |a|^2 = " + std::to_string(n2) +
                               ", tail bound = " + std::to_string(tail_bound_));
}

Complex PureBipartiteState::amplitude(const OccupationLabel& hor, const OccupationLabel& out) const {
    Complex sum{0.0, 0.0};
    for(const auto& e : entries_) {
        if(hor_basis_[e.hor] == hor && out_basis_[e.out] == out) sum += e.amplitude;
    }
    return sum;
}

double PureBipartiteState::norm_squared() const {
    double sum = 0.0;
    for(const auto& e : entries_) sum += std::norm(e.amplitude);
    return sum;
}

DensityOperator::DensityOperator(Statistics statistics, std::vector<OccupationLabel> basis, Eigen::MatrixXcd matrix,
                                 double trace_deficit)
    : statistics_(statistics), basis_(std::move(basis)), matrix_(std::move(matrix)) {
    check_basis(statistics_, basis_);
    const auto n = static_cast<Eigen::Index>(basis_.size());
    if(matrix_.rows() != n || matrix_.cols() != n) throw InvalidDensityOperator("matrix dimension does not match basis");
    const double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if(asym > kHermitianTolerance)
        throw InvalidDensityOperator("operator is not Hermitian (max asymmetry " + std::to_string(asym) + ")");
    const double tr = trace();
    const double allowance = std::max(kTraceTolerance, trace_deficit + kNormTolerance);
    if(tr > 1.0 + kNormTolerance || tr < 1.0 - allowance)
        throw InvalidDensityOperator("trace " + std::to_string(tr) + " outside [1 - " + std::to_string(allowance) +
                                     ", 1]");
}

DensityOperator DensityOperator::diagonal(Statistics statistics, std::vector<OccupationLabel> basis,
                                          const std::vector<double>& weights, double trace_deficit) {
    if(weights.size() != basis.size()) throw InvalidDensityOperator("weights and basis differ in length");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(weights.size()),
                                                static_cast<Eigen::Index>(weights.size()));
    for(std::size_t i = 0; i < weights.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        m(k, k) = weights[i];
    }
    return DensityOperator(statistics, std::move(basis), std::move(m), trace_deficit);
}

double DensityOperator::trace() const { return matrix_.diagonal().real().sum(); }

std::vector<double> DensityOperator::diagonal_entries() const {
    std::vector<double> d(basis_.size());
    for(std::size_t i = 0; i < d.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        d[i] = matrix_(k, k).real();
    }
    return d;
}

double DensityOperator::offdiag_norm() const {
    double sum = 0.0;
    for(Eigen::Index j = 0; j < matrix_.cols(); ++j)
        for(Eigen::Index i = 0; i < matrix_.rows(); ++i)
            if(i != j) sum += std::norm(matrix_(i, j));
    return std::sqrt(sum);
}

double DensityOperator::offdiag_max() const {
    double worst = 0.0;
    for(Eigen::Index j = 0; j < matrix_.cols(); ++j)
        for(Eigen::Index i = 0; i < matrix_.rows(); ++i)
            if(i != j) worst = std::max(worst, std::abs(matrix_(i, j)));
    return worst;
}

DensityOperator partial_trace(const PureBipartiteState& state, Subsystem keep) {
    const bool keep_out = keep == Subsystem::out;
    const auto& kept_basis = keep_out ? state.out_basis() : state.hor_basis();

    // Group amplitudes by the traced-out label: rho_ij = sum_k a(k,i) conj(a(k,j)).
    std::map<std::size_t, std::vector<std::pair<Eigen::Index, Complex>>> groups;
    for(const auto& e : state.entries()) {
        const std::size_t traced = keep_out ? e.hor : e.out;
        const auto kept = static_cast<Eigen::Index>(keep_out ? e.out : e.hor);
        groups[traced].emplace_back(kept, e.amplitude);
    }

    const auto dim = static_cast<Eigen::Index>(kept_basis.size());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for(const auto& [traced, column] : groups) {
        for(const auto& [i, ai] : column)
            for(const auto& [j, aj] : column) rho(i, j) += ai * std::conj(aj);
    }
    return DensityOperator(state.statistics(), kept_basis, std::move(rho), state.tail_bound());
}

Eigen::VectorXd spectrum(const DensityOperator& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    if(solver.info() != Eigen::Success) throw InvalidDensityOperator("eigen decomposition did not converge");
    return solver.eigenvalues();
}

double von_neumann_entropy(const DensityOperator& rho, EntropyPath path) {
    if(path == EntropyPath::automatic) path = rho.offdiag_max() == 0.0 ? EntropyPath::diagonal : EntropyPath::eigen;

    std::vector<double> lambdas;
    if(path == EntropyPath::diagonal) {
        if(rho.offdiag_max() > kDiagonalTolerance)
            throw InvalidDensityOperator("diagonal entropy path requested for a non-diagonal operator");
        lambdas = rho.diagonal_entries();
    } else {
        const Eigen::VectorXd ev = spectrum(rho);
        lambdas.assign(ev.data(), ev.data() + ev.size());
    }

    double entropy = 0.0;
    for(double lambda : lambdas) {
        if(lambda < -kPositivityTolerance)
            throw InvalidDensityOperator("operator is not positive semidefinite (eigenvalue " +
                                         std::to_string(lambda) + ")");
        entropy += xlog2x(lambda);
    }
    return std::max(entropy, 0.0);
}

double purity(const DensityOperator& rho) {
    // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
    return rho.matrix().squaredNorm();
}

double mean_occupation(const DensityOperator& rho, OccupationComponent which) {
    if(rho.offdiag_max() > kDiagonalTolerance)
        throw InvalidDensityOperator("mean occupation needs an operator diagonal in the occupation basis");
    if(rho.statistics() == Statistics::boson && which == OccupationComponent::antiparticle)
        throw InvalidParameter("bosonic channels have no antiparticle occupation");

    const auto p = rho.diagonal_entries();
    double mean = 0.0;
    for(std::size_t i = 0; i < p.size(); ++i) {
        const auto& label = rho.basis()[i];
        int n = 0;
        switch(which) {
            case OccupationComponent::particle: n = label.particle; break;
            case OccupationComponent::antiparticle: n = label.antiparticle; break;
            case OccupationComponent::total: n = label.particle + label.antiparticle; break;
        }
        mean += n * p[i];
    }
    return mean;
}

double global_purity(const PureBipartiteState& state) {
    // Elementwise sum of |psi_i conj(psi_j)|^2 over the stored support.
    const auto& entries = state.entries();
    double tr = 0.0;
    double tr_sq = 0.0;
    for(const auto& a : entries) {
        tr += std::norm(a.amplitude);
        for(const auto& b : entries) tr_sq += std::norm(a.amplitude * std::conj(b.amplitude));
    }
    if(!(tr > 0.0)) throw InvalidParameter("state has no support");
    return tr_sq / (tr * tr);
}

} // namespace hzent
