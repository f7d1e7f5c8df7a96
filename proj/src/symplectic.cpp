#include "rindler/symplectic.hpp"

#include <cmath>
#include <stdexcept>

namespace rindler {

SymplecticMap SymplecticMap::identity(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("SymplecticMap::identity: n_modes must be >= 1");
    return SymplecticMap(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticMap SymplecticMap::from_matrix(Eigen::MatrixXd s) {
    if (s.rows() != s.cols() || s.rows() < 2 || s.rows() % 2 != 0) {
        throw std::invalid_argument("SymplecticMap::from_matrix: need a square 2n x 2n matrix");
    }
    return SymplecticMap(std::move(s));
}

double SymplecticMap::symplecticity_defect() const {
    const Eigen::MatrixXd omega = symplectic_form(n_modes());
    return (s_ * omega * s_.transpose() - omega).cwiseAbs().maxCoeff();
}

CovarianceMatrix SymplecticMap::apply(const CovarianceMatrix& cov) const {
    if (cov.n_modes() != n_modes()) {
        throw std::invalid_argument("SymplecticMap::apply: mode count mismatch");
    }
    Eigen::MatrixXd m = s_ * cov.matrix() * s_.transpose();
    return CovarianceMatrix(0.5 * (m + m.transpose()));
}

SymplecticMap two_mode_squeezer(double xi, Mode mode_i, Mode mode_j, int n_modes) {
    if (n_modes < 2) throw std::invalid_argument("two_mode_squeezer: need at least two modes");
    const int i = mode_index(mode_i);
    const int j = mode_index(mode_j);
    if (i == j) throw std::invalid_argument("two_mode_squeezer: modes must differ");
    if (i < 0 || i >= n_modes || j < 0 || j >= n_modes) {
        throw std::invalid_argument("two_mode_squeezer: mode out of range");
    }
    if (!std::isfinite(xi) || std::abs(xi) > 350.0) {
        throw std::invalid_argument("two_mode_squeezer: |xi| beyond double-precision cosh range");
    }
    const double ch = std::cosh(xi);
    const double sh = std::sinh(xi);
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
    s(q_index(i), q_index(i)) = ch;
    s(q_index(i), q_index(j)) = -sh;
    s(p_index(i), p_index(i)) = ch;
    s(p_index(i), p_index(j)) = sh;
    s(q_index(j), q_index(i)) = -sh;
    s(q_index(j), q_index(j)) = ch;
    s(p_index(j), p_index(i)) = sh;
    s(p_index(j), p_index(j)) = ch;
    return SymplecticMap::from_matrix(std::move(s));
}

SymplecticMap unruh_map(double r, int n_modes) {
    if (n_modes < 3) throw std::invalid_argument("unruh_map: needs modes A, I, II");
    if (r < 0.0) throw std::invalid_argument("unruh_map: r must be >= 0");
    return two_mode_squeezer(r, Mode::I, Mode::II, n_modes);
}

} // namespace rindler
