// covariance.hpp — covariance matrices of zero-mean Gaussian states

#pragma once

#include "rindler/modes.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace rindler {

// Real symmetric 2n x 2n matrix of symmetrized quadrature second moments,
// V_ij = (1/2)<{X_i, X_j}>. All states in scope have zero first moments.
// Instances are immutable values; every factory symmetrizes, so stored
// matrices are exactly symmetric.
class CovarianceMatrix {
public:
    CovarianceMatrix() = default;

    // Vacuum of n modes: (1/2) * Identity. Rejects n_modes < 1.
    static CovarianceMatrix vacuum(int n_modes);

    // Wraps an externally supplied matrix. Rejects non-square, odd-sized,
    // or non-symmetric (beyond 1e-12 entrywise) input; symmetrizes the rest.
    static CovarianceMatrix from_matrix(const Eigen::MatrixXd& m);

    int n_modes() const { return static_cast<int>(m_.rows()) / 2; }
    const Eigen::MatrixXd& matrix() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }

private:
    explicit CovarianceMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {}
    Eigen::MatrixXd m_;

    friend CovarianceMatrix marginal(const CovarianceMatrix&, std::span<const int>);
    friend class SymplecticMap;
    friend CovarianceMatrix partial_transpose(const CovarianceMatrix&, std::span<const int>);
};

// Restriction of the state to a subset of modes, given as strictly
// increasing mode indices (canonical order). Rows/columns are selected;
// no renormalization is needed for Gaussian marginals.
CovarianceMatrix marginal(const CovarianceMatrix& cov, std::span<const int> modes);

inline CovarianceMatrix marginal(const CovarianceMatrix& cov, std::initializer_list<Mode> modes) {
    std::vector<int> idx;
    idx.reserve(modes.size());
    for (Mode m : modes) idx.push_back(mode_index(m));
    return marginal(cov, std::span<const int>(idx));
}

// Symplectic spectrum: the n distinct moduli of the eigenvalues of
// i*Omega*V, ascending. Computed as the paired singular values of the
// antisymmetric matrix sqrt(V)*Omega*sqrt(V), which is similar to i*Omega*V
// and numerically well conditioned. Physical states have all values >= 1/2.
// Throws if V is not positive definite or the eigensolver fails.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cov);

inline double min_symplectic_eigenvalue(const CovarianceMatrix& cov) {
    return symplectic_eigenvalues(cov).front();
}

// Uncertainty-relation check: all symplectic eigenvalues >= 1/2 - tol.
inline bool is_physical(const CovarianceMatrix& cov, double tol = 1e-10) {
    return min_symplectic_eigenvalue(cov) >= 0.5 - tol;
}

} // namespace rindler
