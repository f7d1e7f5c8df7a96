// modes.hpp — mode labels, quadrature indexing, and the symplectic form

#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace rindler {

// The three bosonic modes of the scenario: Alice's inertial mode A and the
// two Rindler-wedge modes I and II seen by the accelerated observer.
// Canonical ordering A < I < II is global; the phase-space vector is
// (q_A, p_A, q_I, p_I, q_II, p_II).
enum class Mode : int { A = 0, I = 1, II = 2 };

constexpr int mode_index(Mode m) noexcept { return static_cast<int>(m); }

// Row/column of the q (position) and p (momentum) quadrature of mode k.
constexpr int q_index(int k) noexcept { return 2 * k; }
constexpr int p_index(int k) noexcept { return 2 * k + 1; }

inline std::string to_string(Mode m) {
    switch (m) {
        case Mode::A:  return "A";
        case Mode::I:  return "I";
        case Mode::II: return "II";
    }
    throw std::invalid_argument("to_string: unknown mode");
}

// Symplectic form Omega: block diagonal with [[0, 1], [-1, 0]] per mode.
// Convention a = (q + ip)/sqrt(2), so [q, p] = i and the vacuum quadrature
// variance is 1/2.
inline Eigen::MatrixXd symplectic_form(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("symplectic_form: n_modes must be >= 1");
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        omega(q_index(k), p_index(k)) = 1.0;
        omega(p_index(k), q_index(k)) = -1.0;
    }
    return omega;
}

} // namespace rindler
