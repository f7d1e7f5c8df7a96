// fock.hpp — truncated-Fock-space reference implementation: builds the exact
// three-mode state at a per-mode cutoff and recomputes covariances and the
// logarithmic negativity directly from state vectors and density matrices.
// Everything here is an independent check on the symplectic construction;
// none of it is used by the Gaussian pipeline.

#pragma once

#include "rindler/covariance.hpp"
#include "rindler/modes.hpp"
#include "rindler/scenario.hpp"

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace rindler::fock {

// Kernel execution policy. The openmp variant parallelizes over independent
// slices/rows only; per-element arithmetic and reduction order are identical
// to the serial variant, so both produce bitwise-equal results.
enum class Exec { serial, openmp };

// Amplitudes over the |n_A, n_I, n_II> basis with n < cutoff per mode,
// flat layout amp[(n_A * d + n_I) * d + n_II].
struct TruncatedState {
    int cutoff = 0;
    std::vector<std::complex<double>> amp;

    static TruncatedState zero(int cutoff);

    std::complex<double>& at(int n_a, int n_i, int n_ii) {
        return amp[static_cast<std::size_t>((n_a * cutoff + n_i) * cutoff + n_ii)];
    }
    std::complex<double> at(int n_a, int n_i, int n_ii) const {
        return amp[static_cast<std::size_t>((n_a * cutoff + n_i) * cutoff + n_ii)];
    }

    double norm() const;
};

// Reduced density matrix over the kept modes (canonical order), composite
// index mixed-radix with the first kept mode slowest. Trace is the surviving
// norm of the underlying state (not renormalized).
struct DensityMatrix {
    std::vector<Mode> modes;
    int cutoff = 0;
    Eigen::MatrixXcd rho;
};

// Annihilation operator at cutoff d: entries sqrt(n) on the superdiagonal.
// Rejects d < 2.
Eigen::MatrixXcd ladder_matrix(int d);

// Upper bound on the squared norm lost to the cutoff. Union bound over the
// exact per-mode photon-number tails: each single-mode marginal of the
// scenario state is thermal with mean occupation
//   nbar_A  = sinh^2 s,
//   nbar_I  = cosh^2 r sinh^2 s + sinh^2 r,
//   nbar_II = sinh^2 r cosh^2 s,
// and a thermal tail P(n >= d) = (nbar/(1+nbar))^d. Zero at s = r = 0,
// decreasing in d, increasing in s and r.
double truncation_tail(const ScenarioParams& params, int cutoff);

// Maximum tail accepted by build_state_fock.
inline constexpr double kMaxTruncationTail = 1e-8;

// Applies exp(xi (ab - a^dag b^dag)) to the pair (mode_a, mode_b) of the
// tensor, via the disentangled normally-ordered form
//   exp(-tanh(xi) a^dag b^dag) * sech(xi)^(n_a + n_b + 1) * exp(tanh(xi) ab);
// both exponential series terminate within the cutoff. This is the Fock
// realization of two_mode_squeezer: matrix elements between basis states
// inside the cutoff are exact.
void apply_two_mode_squeezer(TruncatedState& psi, double xi, Mode mode_a, Mode mode_b,
                             Exec exec = Exec::openmp);

// Amplitudes of the scenario state: (I, II) squeezer after the (A, I)
// squeezer on |000>. Refuses parameters whose truncation tail exceeds
// kMaxTruncationTail instead of silently degrading.
TruncatedState build_state_fock(const ScenarioParams& params, int cutoff,
                                Exec exec = Exec::openmp);

// 6x6 covariance matrix of the truncated state, evaluated as normalized
// expectation values of the symmetrized quadrature products with
// q = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2)).
CovarianceMatrix covariance_from_state(const TruncatedState& psi, Exec exec = Exec::openmp);

// First moments <q_m>, <p_m> in quadrature order; vanish for the pair-excited
// states built here. Diagnostic for tests.
Eigen::VectorXd first_moments(const TruncatedState& psi);

// Partial trace onto the kept modes. Rejects empty keep sets and results
// whose dimension exceeds 4096 (pair reductions up to cutoff 64).
DensityMatrix reduced_density(const TruncatedState& psi, std::span<const Mode> keep,
                              Exec exec = Exec::openmp);

inline DensityMatrix reduced_density(const TruncatedState& psi, std::initializer_list<Mode> keep,
                                     Exec exec = Exec::openmp) {
    std::vector<Mode> k(keep);
    return reduced_density(psi, std::span<const Mode>(k), exec);
}

// max(0, ln ||rho^(T_left)||_1) for a two-mode density matrix: the partial
// transpose swaps the bra/ket indices of `left`, and the trace norm is the
// sum of |eigenvalues| of the resulting Hermitian matrix. Coincides with the
// Gaussian measure for the states in scope.
double log_negativity_fock(const DensityMatrix& rho, Mode left);

} // namespace rindler::fock
