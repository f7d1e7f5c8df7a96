#include "rindler/covariance.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <stdexcept>

namespace rindler {

CovarianceMatrix CovarianceMatrix::vacuum(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("CovarianceMatrix::vacuum: n_modes must be >= 1");
    return CovarianceMatrix(0.5 * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

CovarianceMatrix CovarianceMatrix::from_matrix(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols() || m.rows() < 2 || m.rows() % 2 != 0) {
        throw std::invalid_argument("CovarianceMatrix::from_matrix: need a square 2n x 2n matrix");
    }
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12) {
        throw std::invalid_argument("CovarianceMatrix::from_matrix: matrix is not symmetric");
    }
    return CovarianceMatrix(0.5 * (m + m.transpose()));
}

CovarianceMatrix marginal(const CovarianceMatrix& cov, std::span<const int> modes) {
    if (modes.empty()) throw std::invalid_argument("marginal: empty mode subset");
    const int n = cov.n_modes();
    for (std::size_t k = 0; k < modes.size(); ++k) {
        if (modes[k] < 0 || modes[k] >= n) {
            throw std::invalid_argument("marginal: mode index out of range");
        }
        if (k > 0 && modes[k] <= modes[k - 1]) {
            throw std::invalid_argument("marginal: modes must be strictly increasing");
        }
    }
    const int m = static_cast<int>(modes.size());
    Eigen::MatrixXd out(2 * m, 2 * m);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            out.block<2, 2>(2 * a, 2 * b) =
                cov.matrix().block<2, 2>(2 * modes[a], 2 * modes[b]);
        }
    }
    return CovarianceMatrix(out);
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cov) {
    const int n = cov.n_modes();
    const Eigen::LLT<Eigen::MatrixXd> llt(cov.matrix());
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error(
            "symplectic_eigenvalues: matrix is not positive definite or factorization failed");
    }
    // W = L^T Omega L for any factor V = L L^T is antisymmetric and similar
    // to Omega V, so its singular values are the symplectic eigenvalues,
    // each twice. The Cholesky factor keeps the small eigenvalues of badly
    // conditioned V from contaminating the spectrum (a matrix square root
    // would not).
    const Eigen::MatrixXd l = llt.matrixL();
    const Eigen::MatrixXd w = l.transpose() * symplectic_form(n) * l;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(w);
    const Eigen::VectorXd sv = svd.singularValues(); // descending
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(n - 1 - k)] = 0.5 * (sv(2 * k) + sv(2 * k + 1));
    }
    return out;
}

} // namespace rindler
