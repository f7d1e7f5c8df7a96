#include "rindler/fock.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace rindler::fock {

namespace {

using cplx = std::complex<double>;

double thermal_tail(double nbar, int cutoff) {
    if (nbar <= 0.0) return 0.0;
    return std::pow(nbar / (1.0 + nbar), cutoff);
}

// One d x d slice of the tensor transformed by the disentangled squeezer.
// All arithmetic is per slice and serial, so the parallel driver below is
// bitwise identical to the serial one.
void squeeze_slice(cplx* slice, int d, double tanh_xi, const std::vector<double>& sqrt_n,
                   const std::vector<double>& sech_pow, std::vector<cplx>& cur,
                   std::vector<cplx>& next) {
    const std::size_t nn = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);

    // exp(tanh(xi) ab): lowering series, terminates once the support empties.
    std::copy(slice, slice + nn, cur.begin());
    for (int k = 1; k < d; ++k) {
        const double coeff = tanh_xi / static_cast<double>(k);
        bool any = false;
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                cplx v(0.0, 0.0);
                if (m + 1 < d && n + 1 < d) {
                    v = coeff * sqrt_n[m + 1] * sqrt_n[n + 1] * cur[(m + 1) * d + (n + 1)];
                    if (v != cplx(0.0, 0.0)) any = true;
                }
                next[m * d + n] = v;
            }
        }
        std::swap(cur, next);
        for (std::size_t idx = 0; idx < nn; ++idx) slice[idx] += cur[idx];
        if (!any) break;
    }

    // sech(xi)^(n_a + n_b + 1)
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            slice[m * d + n] *= sech_pow[m + n + 1];
        }
    }

    // exp(-tanh(xi) a^dag b^dag): raising series; terms pushed past the
    // cutoff are dropped, which leaves all in-cutoff matrix elements exact.
    std::copy(slice, slice + nn, cur.begin());
    for (int k = 1; k < d; ++k) {
        const double coeff = -tanh_xi / static_cast<double>(k);
        bool any = false;
        for (int m = d - 1; m >= 0; --m) {
            for (int n = d - 1; n >= 0; --n) {
                cplx v(0.0, 0.0);
                if (m > 0 && n > 0) {
                    v = coeff * sqrt_n[m] * sqrt_n[n] * cur[(m - 1) * d + (n - 1)];
                    if (v != cplx(0.0, 0.0)) any = true;
                }
                next[m * d + n] = v;
            }
        }
        std::swap(cur, next);
        for (std::size_t idx = 0; idx < nn; ++idx) slice[idx] += cur[idx];
        if (!any) break;
    }
}

// sqrt(2) * q or sqrt(2) * p applied along one tensor axis, i.e. (a + a^dag)
// or -i(a - a^dag); the callers fold the two 1/sqrt(2) factors of a second
// moment into a single division by 2, which keeps vacuum moments exact.
TruncatedState apply_quadrature_unscaled(const TruncatedState& psi, int axis, bool momentum) {
    const int d = psi.cutoff;
    TruncatedState out = TruncatedState::zero(d);
    std::vector<double> sqrt_n(static_cast<std::size_t>(d) + 1);
    for (int n = 0; n <= d; ++n) sqrt_n[static_cast<std::size_t>(n)] = std::sqrt(n);

    const int strides[3] = {d * d, d, 1};
    const int stride = strides[axis];
    for (int a = 0; a < d; ++a) {
        for (int i = 0; i < d; ++i) {
            for (int k = 0; k < d; ++k) {
                const int n_axis = (axis == 0) ? a : (axis == 1 ? i : k);
                const std::size_t idx = static_cast<std::size_t>((a * d + i) * d + k);
                // a |n+1> and a^dag |n-1> contributions to level n.
                cplx lower(0.0, 0.0), raise(0.0, 0.0);
                if (n_axis + 1 < d) {
                    lower = sqrt_n[n_axis + 1] * psi.amp[idx + static_cast<std::size_t>(stride)];
                }
                if (n_axis > 0) {
                    raise = sqrt_n[n_axis] * psi.amp[idx - static_cast<std::size_t>(stride)];
                }
                out.amp[idx] = momentum ? cplx(0.0, -1.0) * (lower - raise) : lower + raise;
            }
        }
    }
    return out;
}

cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

} // namespace

TruncatedState TruncatedState::zero(int cutoff) {
    if (cutoff < 2) throw std::invalid_argument("TruncatedState: cutoff must be >= 2");
    TruncatedState psi;
    psi.cutoff = cutoff;
    psi.amp.assign(static_cast<std::size_t>(cutoff) * cutoff * cutoff, cplx(0.0, 0.0));
    return psi;
}

double TruncatedState::norm() const {
    double acc = 0.0;
    for (const cplx& a : amp) acc += std::norm(a);
    return std::sqrt(acc);
}

Eigen::MatrixXcd ladder_matrix(int d) {
    if (d < 2) throw std::invalid_argument("ladder_matrix: cutoff must be >= 2");
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 1; n < d; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

double truncation_tail(const ScenarioParams& params, int cutoff) {
    params.validate();
    if (cutoff < 2) throw std::invalid_argument("truncation_tail: cutoff must be >= 2");
    const double sh_s = std::sinh(params.s);
    const double ch_s = std::cosh(params.s);
    const double sh_r = std::sinh(params.r);
    const double ch_r = std::cosh(params.r);
    const double nbar_a = sh_s * sh_s;
    const double nbar_i = ch_r * ch_r * sh_s * sh_s + sh_r * sh_r;
    const double nbar_ii = sh_r * sh_r * ch_s * ch_s;
    const double tail =
        thermal_tail(nbar_a, cutoff) + thermal_tail(nbar_i, cutoff) + thermal_tail(nbar_ii, cutoff);
    return std::min(1.0, tail);
}

void apply_two_mode_squeezer(TruncatedState& psi, double xi, Mode mode_a, Mode mode_b, Exec exec) {
    const int d = psi.cutoff;
    const int axis_a = mode_index(mode_a);
    const int axis_b = mode_index(mode_b);
    if (axis_a == axis_b) throw std::invalid_argument("apply_two_mode_squeezer: modes must differ");
    if (!std::isfinite(xi)) throw std::invalid_argument("apply_two_mode_squeezer: xi must be finite");

    const double tanh_xi = std::tanh(xi);
    const double sech_xi = 1.0 / std::cosh(xi);
    std::vector<double> sqrt_n(static_cast<std::size_t>(d) + 1);
    for (int n = 0; n <= d; ++n) sqrt_n[static_cast<std::size_t>(n)] = std::sqrt(n);
    std::vector<double> sech_pow(static_cast<std::size_t>(2 * d));
    sech_pow[0] = 1.0;
    for (int j = 1; j < 2 * d; ++j) sech_pow[static_cast<std::size_t>(j)] = sech_pow[j - 1] * sech_xi;

    const int strides[3] = {d * d, d, 1};
    const int spectator = 3 - axis_a - axis_b;
    const int stride_a = strides[axis_a];
    const int stride_b = strides[axis_b];
    const int stride_s = strides[spectator];

    const bool parallel = exec == Exec::openmp;
#pragma omp parallel for schedule(static) if (parallel)
    for (int t = 0; t < d; ++t) {
        std::vector<cplx> slice(static_cast<std::size_t>(d) * d);
        std::vector<cplx> cur(slice.size());
        std::vector<cplx> next(slice.size());
        const std::size_t base = static_cast<std::size_t>(t) * static_cast<std::size_t>(stride_s);
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                slice[m * d + n] = psi.amp[base + static_cast<std::size_t>(m * stride_a + n * stride_b)];
            }
        }
        squeeze_slice(slice.data(), d, tanh_xi, sqrt_n, sech_pow, cur, next);
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                psi.amp[base + static_cast<std::size_t>(m * stride_a + n * stride_b)] = slice[m * d + n];
            }
        }
    }
}

TruncatedState build_state_fock(const ScenarioParams& params, int cutoff, Exec exec) {
    params.validate();
    if (cutoff < 2) throw std::invalid_argument("build_state_fock: cutoff must be >= 2");
    const double tail = truncation_tail(params, cutoff);
    if (tail > kMaxTruncationTail) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "build_state_fock: truncation tail %.3e exceeds %.1e; raise the cutoff or "
                      "reduce s, r",
                      tail, kMaxTruncationTail);
        throw std::invalid_argument(msg);
    }
    TruncatedState psi = TruncatedState::zero(cutoff);
    psi.at(0, 0, 0) = cplx(1.0, 0.0);
    // Stage order matters: the (A, I) squeezer first, then the Unruh pair.
    apply_two_mode_squeezer(psi, params.s, Mode::A, Mode::I, exec);
    apply_two_mode_squeezer(psi, params.r, Mode::I, Mode::II, exec);
    return psi;
}

CovarianceMatrix covariance_from_state(const TruncatedState& psi, Exec exec) {
    double norm_sq = 0.0;
    for (const cplx& a : psi.amp) norm_sq += std::norm(a);
    if (norm_sq <= 0.0) throw std::invalid_argument("covariance_from_state: zero state");

    std::vector<TruncatedState> quad;
    quad.reserve(6);
    for (int m = 0; m < 3; ++m) {
        quad.push_back(apply_quadrature_unscaled(psi, m, false));
        quad.push_back(apply_quadrature_unscaled(psi, m, true));
    }

    Eigen::MatrixXd v(6, 6);
    const bool parallel = exec == Exec::openmp;
#pragma omp parallel for schedule(static) if (parallel)
    for (int flat = 0; flat < 21; ++flat) {
        // Upper triangle (i <= j) enumerated row by row.
        int i = 0, j = flat;
        while (j >= 6 - i) {
            j -= 6 - i;
            ++i;
        }
        j += i;
        const double value = dot(quad[static_cast<std::size_t>(i)].amp,
                                 quad[static_cast<std::size_t>(j)].amp)
                                 .real() /
                             (2.0 * norm_sq);
        v(i, j) = value;
        v(j, i) = value;
    }
    return CovarianceMatrix::from_matrix(v);
}

Eigen::VectorXd first_moments(const TruncatedState& psi) {
    double norm_sq = 0.0;
    for (const cplx& a : psi.amp) norm_sq += std::norm(a);
    if (norm_sq <= 0.0) throw std::invalid_argument("first_moments: zero state");
    const double scale = std::sqrt(2.0) * norm_sq;
    Eigen::VectorXd mean(6);
    for (int m = 0; m < 3; ++m) {
        const TruncatedState q = apply_quadrature_unscaled(psi, m, false);
        const TruncatedState p = apply_quadrature_unscaled(psi, m, true);
        mean(q_index(m)) = dot(psi.amp, q.amp).real() / scale;
        mean(p_index(m)) = dot(psi.amp, p.amp).real() / scale;
    }
    return mean;
}

DensityMatrix reduced_density(const TruncatedState& psi, std::span<const Mode> keep, Exec exec) {
    if (keep.empty()) throw std::invalid_argument("reduced_density: empty keep set");
    std::vector<Mode> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw std::invalid_argument("reduced_density: duplicate modes");
    }

    const int d = psi.cutoff;
    const int nk = static_cast<int>(kept.size());
    long dim = 1;
    for (int k = 0; k < nk; ++k) dim *= d;
    if (dim > 4096) {
        throw std::invalid_argument("reduced_density: reduced dimension exceeds 4096");
    }

    std::vector<int> kept_axes;
    std::vector<int> traced_axes;
    for (int axis = 0; axis < 3; ++axis) {
        const bool is_kept =
            std::find(kept.begin(), kept.end(), static_cast<Mode>(axis)) != kept.end();
        (is_kept ? kept_axes : traced_axes).push_back(axis);
    }

    const int strides[3] = {d * d, d, 1};
    const int n_traced = static_cast<int>(traced_axes.size());
    long traced_dim = 1;
    for (int k = 0; k < n_traced; ++k) traced_dim *= d;

    DensityMatrix out;
    out.modes = kept;
    out.cutoff = d;
    out.rho.resize(dim, dim);

    const bool parallel = exec == Exec::openmp;
#pragma omp parallel for schedule(static) if (parallel)
    for (long row = 0; row < dim; ++row) {
        // decode mixed-radix composite indices, first kept axis slowest
        long row_base = 0;
        long rr = row;
        for (int k = nk - 1; k >= 0; --k) {
            row_base += (rr % d) * strides[kept_axes[static_cast<std::size_t>(k)]];
            rr /= d;
        }
        for (long col = 0; col < dim; ++col) {
            long col_base = 0;
            long cc = col;
            for (int k = nk - 1; k >= 0; --k) {
                col_base += (cc % d) * strides[kept_axes[static_cast<std::size_t>(k)]];
                cc /= d;
            }
            cplx acc(0.0, 0.0);
            for (long t = 0; t < traced_dim; ++t) {
                long offset = 0;
                long tt = t;
                for (int k = n_traced - 1; k >= 0; --k) {
                    offset += (tt % d) * strides[traced_axes[static_cast<std::size_t>(k)]];
                    tt /= d;
                }
                acc += psi.amp[static_cast<std::size_t>(row_base + offset)] *
                       std::conj(psi.amp[static_cast<std::size_t>(col_base + offset)]);
            }
            out.rho(row, col) = acc;
        }
    }
    return out;
}

double log_negativity_fock(const DensityMatrix& rho, Mode left) {
    if (rho.modes.size() != 2) {
        throw std::invalid_argument("log_negativity_fock: need a two-mode density matrix");
    }
    const auto pos_it = std::find(rho.modes.begin(), rho.modes.end(), left);
    if (pos_it == rho.modes.end()) {
        throw std::invalid_argument("log_negativity_fock: left mode not part of the state");
    }
    const int left_pos = static_cast<int>(pos_it - rho.modes.begin());
    const int d = rho.cutoff;

    Eigen::MatrixXcd pt(rho.rho.rows(), rho.rho.cols());
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                for (int l = 0; l < d; ++l) {
                    // transpose the left subsystem's bra/ket indices
                    if (left_pos == 0) {
                        pt(i * d + j, k * d + l) = rho.rho(k * d + j, i * d + l);
                    } else {
                        pt(i * d + j, k * d + l) = rho.rho(i * d + l, k * d + j);
                    }
                }
            }
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("log_negativity_fock: eigensolver failed");
    }
    const double trace_norm = es.eigenvalues().cwiseAbs().sum();
    return std::max(0.0, std::log(trace_norm));
}

} // namespace rindler::fock
