// Timing comparison of the serial and OpenMP Fock kernels. Both paths are
// required to produce bitwise-identical output, which is asserted here
// before any timing is reported.

#include "rindler/fock.hpp"
#include "rindler/scenario.hpp"

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace rindler;
using fock::Exec;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e99;
    for (int k = 0; k < reps; ++k) {
        const double t0 = omp_get_wtime();
        fn();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void require(bool ok, const char* what) {
    if (!ok) {
        std::fprintf(stderr, "bench_fock: serial/openmp mismatch in %s\n", what);
        std::exit(1);
    }
}

} // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    const ScenarioParams params{0.4, 0.4};

    std::printf("fock kernels, serial vs openmp (%d thread(s), best of %d)\n",
                omp_get_max_threads(), reps);
    std::printf("%-8s %-22s %12s %12s %9s\n", "cutoff", "kernel", "serial [ms]", "openmp [ms]",
                "speedup");

    for (int d : {16, 24, 32, 40}) {
        const fock::TruncatedState ref = fock::build_state_fock(params, d, Exec::serial);

        const fock::TruncatedState par = fock::build_state_fock(params, d, Exec::openmp);
        require(ref.amp == par.amp, "build_state_fock");
        const double t_build_s =
            best_of(reps, [&] { (void)fock::build_state_fock(params, d, Exec::serial); });
        const double t_build_p =
            best_of(reps, [&] { (void)fock::build_state_fock(params, d, Exec::openmp); });
        std::printf("%-8d %-22s %12.3f %12.3f %8.2fx\n", d, "build_state_fock",
                    1e3 * t_build_s, 1e3 * t_build_p, t_build_s / t_build_p);

        const CovarianceMatrix cs = fock::covariance_from_state(ref, Exec::serial);
        const CovarianceMatrix cp = fock::covariance_from_state(ref, Exec::openmp);
        require((cs.matrix() - cp.matrix()).cwiseAbs().maxCoeff() == 0.0, "covariance_from_state");
        const double t_cov_s =
            best_of(reps, [&] { (void)fock::covariance_from_state(ref, Exec::serial); });
        const double t_cov_p =
            best_of(reps, [&] { (void)fock::covariance_from_state(ref, Exec::openmp); });
        std::printf("%-8d %-22s %12.3f %12.3f %8.2fx\n", d, "covariance_from_state",
                    1e3 * t_cov_s, 1e3 * t_cov_p, t_cov_s / t_cov_p);

        const fock::DensityMatrix rs = fock::reduced_density(ref, {Mode::A, Mode::I}, Exec::serial);
        const fock::DensityMatrix rp = fock::reduced_density(ref, {Mode::A, Mode::I}, Exec::openmp);
        require((rs.rho - rp.rho).cwiseAbs().maxCoeff() == 0.0, "reduced_density");
        const double t_red_s = best_of(
            reps, [&] { (void)fock::reduced_density(ref, {Mode::A, Mode::I}, Exec::serial); });
        const double t_red_p = best_of(
            reps, [&] { (void)fock::reduced_density(ref, {Mode::A, Mode::I}, Exec::openmp); });
        std::printf("%-8d %-22s %12.3f %12.3f %8.2fx\n", d, "reduced_density",
                    1e3 * t_red_s, 1e3 * t_red_p, t_red_s / t_red_p);
    }
    return 0;
}
