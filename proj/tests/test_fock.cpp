#include <doctest.h>

#include "rindler/entanglement.hpp"
#include "rindler/fock.hpp"
#include "rindler/scenario.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

using namespace rindler;
using fock::Exec;

namespace {

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("ladder matrix basics") {
    const Eigen::MatrixXcd a2 = fock::ladder_matrix(2);
    CHECK(a2(0, 1) == std::complex<double>(1.0, 0.0));
    CHECK(a2(0, 0) == std::complex<double>(0.0, 0.0));
    CHECK(a2(1, 0) == std::complex<double>(0.0, 0.0));
    CHECK(a2(1, 1) == std::complex<double>(0.0, 0.0));

    const int d = 7;
    const Eigen::MatrixXcd a = fock::ladder_matrix(d);
    const Eigen::MatrixXcd number = a.adjoint() * a;
    for (int n = 0; n < d; ++n) {
        CHECK(number(n, n).real() == doctest::Approx(n).epsilon(1e-14));
    }
    // [a, a^dag] = I except the truncation corner
    const Eigen::MatrixXcd comm = a * a.adjoint() - a.adjoint() * a;
    for (int n = 0; n < d - 1; ++n) {
        CHECK(comm(n, n).real() == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(comm(d - 1, d - 1).real() == doctest::Approx(1.0 - d).epsilon(1e-14));

    CHECK_THROWS_AS(fock::ladder_matrix(1), std::invalid_argument);
}

TEST_CASE("truncation tail: closed values and monotonicity") {
    CHECK(fock::truncation_tail({0.0, 0.0}, 24) == 0.0);

    // r = 0: modes A and I share the same geometric tail, mode II is empty.
    const double tail = fock::truncation_tail({0.5, 0.0}, 24);
    const double single = std::pow(std::tanh(0.5), 48);
    CHECK(tail >= single);
    CHECK(tail == doctest::Approx(2.0 * single).epsilon(1e-12));
    CHECK(tail < 1e-14);

    CHECK(fock::truncation_tail({0.5, 0.5}, 24) < fock::truncation_tail({0.5, 0.5}, 16));
    CHECK(fock::truncation_tail({0.5, 0.5}, 24) > fock::truncation_tail({0.25, 0.5}, 24));
    CHECK(fock::truncation_tail({0.5, 0.5}, 24) > fock::truncation_tail({0.5, 0.25}, 24));
}

TEST_CASE("fock state at zero parameters is the vacuum") {
    const fock::TruncatedState psi = fock::build_state_fock({0.0, 0.0}, 8);
    CHECK(psi.at(0, 0, 0) == std::complex<double>(1.0, 0.0));
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-15));
    double off = 0.0;
    for (std::size_t i = 1; i < psi.amp.size(); ++i) off += std::norm(psi.amp[i]);
    CHECK(off == 0.0);
}

TEST_CASE("fock amplitudes of the first squeezing stage") {
    // The quadrature convention fixed in two_mode_squeezer (q mixes with
    // -sinh) corresponds to pair amplitudes of alternating sign; their
    // magnitudes are the geometric tanh^m / cosh law.
    const double s = 0.4;
    const int d = 20;
    const fock::TruncatedState psi = fock::build_state_fock({s, 0.0}, d);
    const double t = std::tanh(s);
    for (int m = 0; m < 6; ++m) {
        const double expected = std::pow(-t, m) / std::cosh(s);
        CHECK(psi.at(m, m, 0).real() == doctest::Approx(expected).epsilon(1e-12));
        CHECK(std::abs(psi.at(m, m, 0).imag()) < 1e-15);
    }
    // nothing off the pair diagonal
    CHECK(std::abs(psi.at(1, 2, 0)) == 0.0);
    CHECK(std::abs(psi.at(0, 0, 1)) == 0.0);
    CHECK(psi.norm() <= 1.0 + 1e-12);
    // 1e-12 covers the roundoff of summing d^3 squared amplitudes
    CHECK(1.0 - psi.norm() <= fock::truncation_tail({s, 0.0}, d) + 1e-12);
}

TEST_CASE("fock amplitudes of the acceleration stage alone") {
    const double r = 0.35;
    const int d = 20;
    const fock::TruncatedState psi = fock::build_state_fock({0.0, r}, d);
    const double t = std::tanh(r);
    for (int n = 0; n < 6; ++n) {
        const double expected = std::pow(-t, n) / std::cosh(r);
        CHECK(psi.at(0, n, n).real() == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(std::abs(psi.at(1, 0, 0)) == 0.0);
    CHECK(std::abs(psi.at(0, 1, 2)) == 0.0);
}

TEST_CASE("build refuses cutoffs below the tail tolerance") {
    CHECK_THROWS_AS(fock::build_state_fock({0.5, 0.0}, 8), std::invalid_argument);
    CHECK_THROWS_AS(fock::build_state_fock({0.5, 0.5}, 2), std::invalid_argument);
}

TEST_CASE("norm accounting stays within the tail bound") {
    for (double s : {0.0, 0.25, 0.5}) {
        for (double r : {0.0, 0.25, 0.5}) {
            const fock::TruncatedState psi = fock::build_state_fock({s, r}, 24);
            CHECK(psi.norm() <= 1.0 + 1e-12);
            CHECK(1.0 - psi.norm() <= fock::truncation_tail({s, r}, 24) + 1e-12);
        }
    }
}

TEST_CASE("commutator expectation accounts for the whole norm") {
    const fock::TruncatedState psi = fock::build_state_fock({0.5, 0.5}, 24);
    const double tau = fock::truncation_tail({0.5, 0.5}, 24);
    const int d = psi.cutoff;
    for (int axis = 0; axis < 3; ++axis) {
        double raise = 0.0, lower = 0.0;
        for (int a = 0; a < d; ++a) {
            for (int i = 0; i < d; ++i) {
                for (int k = 0; k < d; ++k) {
                    const int n = axis == 0 ? a : (axis == 1 ? i : k);
                    const double w = std::norm(psi.at(a, i, k));
                    raise += (n + 1.0) * w; // <a a^dag> with the raised level kept
                    lower += n * w;         // <a^dag a>
                }
            }
        }
        CHECK(std::abs(raise - lower - 1.0) <= 10.0 * tau);
    }
}

TEST_CASE("fock covariance of the vacuum") {
    const fock::TruncatedState psi = fock::build_state_fock({0.0, 0.0}, 8);
    const CovarianceMatrix v = fock::covariance_from_state(psi);
    CHECK(max_abs_diff(v.matrix(), 0.5 * Eigen::MatrixXd::Identity(6, 6)) < 1e-14);
}

TEST_CASE("fock covariance reproduces the worked variance entry") {
    const fock::TruncatedState psi = fock::build_state_fock({0.5, 0.5}, 24);
    const CovarianceMatrix v = fock::covariance_from_state(psi);
    CHECK(std::abs(v(0, 0) - 0.5 * std::cosh(1.0)) < 1e-6);
    CHECK(fock::first_moments(psi).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("fock covariance matches the symplectic construction entrywise") {
    for (double s : {0.0, 0.25, 0.5}) {
        for (double r : {0.0, 0.25, 0.5}) {
            const fock::TruncatedState psi = fock::build_state_fock({s, r}, 24);
            const CovarianceMatrix vf = fock::covariance_from_state(psi);
            const CovarianceMatrix vg = build_scenario_state({s, r});
            CHECK(max_abs_diff(vf.matrix(), vg.matrix()) < 1e-6);
        }
    }
}

TEST_CASE("reduced density matrices") {
    const fock::TruncatedState psi = fock::build_state_fock({0.3, 0.4}, 16);
    const double tau = fock::truncation_tail({0.3, 0.4}, 16);

    SUBCASE("keeping everything gives a rank-one projector") {
        const fock::TruncatedState small = fock::build_state_fock({0.1, 0.1}, 6);
        const fock::DensityMatrix rho =
            fock::reduced_density(small, {Mode::A, Mode::I, Mode::II});
        const double trace = rho.rho.trace().real();
        const double trace_sq = (rho.rho * rho.rho).trace().real();
        CHECK(trace_sq == doctest::Approx(trace * trace).epsilon(1e-12));
    }

    SUBCASE("mode-I reduction at s = 0 is the geometric thermal state") {
        const double r = 0.4;
        const fock::TruncatedState accel = fock::build_state_fock({0.0, r}, 16);
        const fock::DensityMatrix rho = fock::reduced_density(accel, {Mode::I});
        const double t2 = std::tanh(r) * std::tanh(r);
        const double ch2 = std::cosh(r) * std::cosh(r);
        for (int n = 0; n < 8; ++n) {
            CHECK(rho.rho(n, n).real() ==
                  doctest::Approx(std::pow(t2, n) / ch2).epsilon(1e-12));
        }
        CHECK(rho.rho.cwiseAbs().sum() ==
              doctest::Approx(rho.rho.diagonal().cwiseAbs().sum()).epsilon(1e-12));
    }

    SUBCASE("pair reductions are hermitian, positive, with the surviving trace") {
        const fock::DensityMatrix rho = fock::reduced_density(psi, {Mode::A, Mode::I});
        CHECK((rho.rho - rho.rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        const double trace = rho.rho.trace().real();
        CHECK(trace <= 1.0 + 1e-12);
        CHECK(1.0 - trace <= tau);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.rho, Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() >= -1e-10);
        const double purity_fock = (rho.rho * rho.rho).trace().real();
        CHECK(purity_fock < 1.0); // mixed once mode II is traced out at r > 0
    }

    SUBCASE("validation") {
        std::vector<Mode> none;
        CHECK_THROWS_AS(fock::reduced_density(psi, std::span<const Mode>(none)),
                        std::invalid_argument);
        const fock::TruncatedState big = fock::build_state_fock({0.2, 0.2}, 17);
        CHECK_THROWS_AS(fock::reduced_density(big, {Mode::A, Mode::I, Mode::II}),
                        std::invalid_argument);
    }
}

TEST_CASE("fock log-negativity: product, pure squeezed, and accelerated cases") {
    // product state: A is unsqueezed at s = 0
    const fock::TruncatedState prod = fock::build_state_fock({0.0, 0.3}, 16);
    const double en_prod =
        fock::log_negativity_fock(fock::reduced_density(prod, {Mode::A, Mode::II}), Mode::A);
    CHECK(en_prod < 1e-8);

    // pure two-mode squeezed vacuum: E_N = 2s
    const fock::TruncatedState pure = fock::build_state_fock({0.5, 0.0}, 24);
    const double en_pure =
        fock::log_negativity_fock(fock::reduced_density(pure, {Mode::A, Mode::I}), Mode::A);
    CHECK(std::abs(en_pure - 1.0) < 1e-4);

    // accelerated: agree with the Gaussian measure on all three partitions
    const ScenarioParams params{0.5, 0.5};
    const fock::TruncatedState psi = fock::build_state_fock(params, 24);
    const CovarianceMatrix state = build_scenario_state(params);
    for (const Partition& partition : scenario_partitions()) {
        const std::vector<Mode> keep = partition.all_modes();
        std::vector<int> idx;
        for (Mode m : keep) idx.push_back(mode_index(m));
        const double gauss = log_negativity(marginal(state, std::span<const int>(idx)), partition).e_n;
        const double en = fock::log_negativity_fock(
            fock::reduced_density(psi, std::span<const Mode>(keep)), partition.left.front());
        CHECK(std::abs(en - gauss) < 1e-4);
    }
}

TEST_CASE("serial and openmp kernels agree bitwise") {
    const ScenarioParams params{0.3, 0.3};
    const int d = 16;
    const fock::TruncatedState serial = fock::build_state_fock(params, d, Exec::serial);
    const fock::TruncatedState parallel = fock::build_state_fock(params, d, Exec::openmp);
    REQUIRE(serial.amp.size() == parallel.amp.size());
    for (std::size_t i = 0; i < serial.amp.size(); ++i) {
        CHECK(serial.amp[i] == parallel.amp[i]);
    }

    const CovarianceMatrix vs = fock::covariance_from_state(serial, Exec::serial);
    const CovarianceMatrix vp = fock::covariance_from_state(serial, Exec::openmp);
    CHECK(max_abs_diff(vs.matrix(), vp.matrix()) == 0.0);

    const fock::DensityMatrix rs = fock::reduced_density(serial, {Mode::I, Mode::II}, Exec::serial);
    const fock::DensityMatrix rp = fock::reduced_density(serial, {Mode::I, Mode::II}, Exec::openmp);
    CHECK((rs.rho - rp.rho).cwiseAbs().maxCoeff() == 0.0);
}
