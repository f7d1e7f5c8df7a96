// entanglement.hpp — partial transposition, PT symplectic spectra, and the
// logarithmic-negativity monotone for two-mode Gaussian states

#pragma once

#include "rindler/covariance.hpp"
#include "rindler/modes.hpp"

#include <span>
#include <string>
#include <vector>

namespace rindler {

// Bipartition of a set of modes. Only one-mode-vs-one-mode partitions are
// accepted by log_negativity: that is the case where positivity under
// partial transpose is necessary and sufficient for separability, so the
// verdict is exact (no Gaussian bound entanglement in this setting).
struct Partition {
    std::vector<Mode> left;
    std::vector<Mode> right;

    void validate() const;

    // All modes of the partition, canonical order.
    std::vector<Mode> all_modes() const;

    // Hyphenated name: the scenario's three cases are A-I, A-II, I-II.
    std::string name() const;
};

Partition partition_from_string(const std::string& text);

// The three bipartitions of the scenario, canonical order.
const std::vector<Partition>& scenario_partitions();

// lambda_min: minimum symplectic eigenvalue of the partially transposed
//             covariance matrix (the separability witness).
// e_n:        logarithmic negativity max(0, -ln(2 lambda_min)), natural log.
// separable:  lambda_min >= 1/2 within a symmetric 1e-12 band.
// boundary:   lambda_min within 1e-12 of the 1/2 threshold.
struct EntanglementReport {
    Partition partition;
    double lambda_min = 0.0;
    double e_n = 0.0;
    bool separable = true;
    bool boundary = false;
};

// Tolerance band around the lambda = 1/2 separability threshold.
inline constexpr double kSeparabilityBand = 1e-12;

// Covariance-level partial transposition: flips the sign of every
// p-quadrature row and column of the modes in `side`. Involution.
CovarianceMatrix partial_transpose(const CovarianceMatrix& cov, std::span<const int> side);

inline CovarianceMatrix partial_transpose(const CovarianceMatrix& cov,
                                          std::initializer_list<Mode> side) {
    std::vector<int> idx;
    idx.reserve(side.size());
    for (Mode m : side) idx.push_back(mode_index(m));
    return partial_transpose(cov, std::span<const int>(idx));
}

// Minimum PT symplectic eigenvalue of the closed-form (A, I) block shape
// [[a,0,-c,0],[0,a,0,c],[-c,0,b,0],[0,c,0,b]]:
//   lambda = sqrt((Sigma - sqrt(Sigma^2 - 4 det V)) / 2),
//   Sigma = a^2 + b^2 + 2c^2,  det V = (ab - c^2)^2.
// Evaluated in the algebraically equivalent cancellation-free form
//   lambda^2 = 2 (ab - c^2)^2 / (Sigma + (a + b) sqrt((a - b)^2 + 4c^2)).
// Requires a, b >= 1/2.
double lambda_closed_form(double a, double b, double c);

// Minimum PT symplectic eigenvalue of an arbitrary two-mode covariance
// matrix via the symplectic invariants of its 2x2 blocks:
//   Delta~ = det(alpha) + det(beta) - 2 det(gamma),
//   lambda^2 = 2 det V / (Delta~ + sqrt(Delta~^2 - 4 det V)).
double lambda_min_two_mode(const CovarianceMatrix& cov);

// Entanglement verdict for a two-mode covariance matrix under a
// one-mode-vs-one-mode partition. The modes of `cov` must be exactly the
// partition's modes. Rejects partitions with more than one mode per side.
EntanglementReport log_negativity(const CovarianceMatrix& cov, const Partition& partition);

// 1/(2^n sqrt(det V)), computed as the product of 1/(2 nu_k) over the
// symplectic spectrum; equals 1 exactly for pure states. Throws on
// unphysical (non positive definite) input.
double purity(const CovarianceMatrix& cov);

} // namespace rindler
