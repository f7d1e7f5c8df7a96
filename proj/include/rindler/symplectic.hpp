// symplectic.hpp — symplectic maps: two-mode squeezers and the Unruh channel

#pragma once

#include "rindler/covariance.hpp"
#include "rindler/modes.hpp"

#include <Eigen/Dense>

namespace rindler {

// Real 2n x 2n matrix S with S*Omega*S^T = Omega. Covariance matrices
// evolve as V -> S V S^T.
class SymplecticMap {
public:
    static SymplecticMap identity(int n_modes);
    static SymplecticMap from_matrix(Eigen::MatrixXd s);

    int n_modes() const { return static_cast<int>(s_.rows()) / 2; }
    const Eigen::MatrixXd& matrix() const { return s_; }

    // max-norm of S*Omega*S^T - Omega; exact symplectic maps give roundoff.
    double symplecticity_defect() const;

    // S V S^T, symmetrized to kill roundoff asymmetry.
    CovarianceMatrix apply(const CovarianceMatrix& cov) const;

private:
    explicit SymplecticMap(Eigen::MatrixXd s) : s_(std::move(s)) {}
    Eigen::MatrixXd s_;
};

inline CovarianceMatrix apply(const SymplecticMap& map, const CovarianceMatrix& cov) {
    return map.apply(cov);
}

// Two-mode squeezer with parameter xi acting on the (i, j) pair and as the
// identity elsewhere. Quadrature action on the squeezed pair:
//   q_i -> q_i cosh xi - q_j sinh xi,   p_i -> p_i cosh xi + p_j sinh xi,
// and symmetrically for mode j. The q sector mixes with -sinh and the
// p sector with +sinh; this sign choice is fixed once, here, and every
// other module (including the Fock-space reference) follows it.
SymplecticMap two_mode_squeezer(double xi, Mode mode_i, Mode mode_j, int n_modes);

// The uniform-acceleration (Unruh) channel with acceleration parameter r:
// a two-mode squeezer on the Rindler pair (I, II).
SymplecticMap unruh_map(double r, int n_modes = 3);

} // namespace rindler
