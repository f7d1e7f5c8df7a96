#include "rindler/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rindler {

namespace {

constexpr double kEps = 2.220446049250313e-16;

// ad - bc with a fused multiply-add correction (Kahan): accurate to a few
// ulps of the result even under heavy cancellation of the products.
double det2(double a, double b, double c, double d) {
    const double w = b * c;
    const double err = std::fma(b, c, -w);
    const double f = std::fma(a, d, -w);
    return f - err;
}

// The determinant value is meaningless once it falls below the noise the
// rounded entries themselves carry, |delta det| ~ eps * (|ad| + |bc|);
// detecting that is the caller's cue to refuse instead of returning noise.
bool det2_resolvable(double det, double a, double b, double c, double d) {
    return std::abs(det) >= 16.0 * kEps * (std::abs(a * d) + std::abs(b * c));
}

// det(V)/t^4 and sqrt(det(V))/t^2 for a two-mode covariance matrix, from the
// entries pre-divided by the scale t. When the q and p sectors decouple (no
// <q p> cross moments, true for every state this toolkit produces) the
// determinant splits into two 2x2 factors; taking their square roots before
// multiplying keeps sqrt(det) representable even when det/t^4 underflows.
void two_mode_det_scaled(const Eigen::MatrixXd& vs, double& det_s, double& sqrt_det_s) {
    const double cross = std::max(std::max(std::abs(vs(0, 1)), std::abs(vs(0, 3))),
                                  std::max(std::abs(vs(2, 1)), std::abs(vs(2, 3))));
    if (cross <= 1e-12) {
        const double det_q = det2(vs(0, 0), vs(0, 2), vs(2, 0), vs(2, 2));
        const double det_p = det2(vs(1, 1), vs(1, 3), vs(3, 1), vs(3, 3));
        if (!det2_resolvable(det_q, vs(0, 0), vs(0, 2), vs(2, 0), vs(2, 2)) ||
            !det2_resolvable(det_p, vs(1, 1), vs(1, 3), vs(3, 1), vs(3, 3))) {
            throw std::runtime_error(
                "covariance entries span too many orders of magnitude to resolve the "
                "symplectic invariants in double precision");
        }
        det_s = det_q * det_p;
        sqrt_det_s = std::sqrt(std::max(0.0, det_q)) * std::sqrt(std::max(0.0, det_p));
        return;
    }
    det_s = vs.determinant();
    sqrt_det_s = std::sqrt(std::max(0.0, det_s));
}

double lambda_from_scaled_invariants(double t, double delta_s, double det_s, double sqrt_det_s) {
    double disc = delta_s * delta_s - 4.0 * det_s;
    if (disc < 0.0) {
        if (disc < -1e-10 * std::max(1.0, delta_s * delta_s)) {
            throw std::invalid_argument("lambda: negative discriminant, invalid covariance entries");
        }
        disc = 0.0;
    }
    const double denom = delta_s + std::sqrt(disc);
    if (denom <= 0.0) {
        throw std::invalid_argument("lambda: nonpositive symplectic invariant");
    }
    return t * sqrt_det_s * std::sqrt(2.0 / denom);
}

} // namespace

void Partition::validate() const {
    if (left.empty() || right.empty()) {
        throw std::invalid_argument("Partition: both sides must be non-empty");
    }
    for (Mode m : left) {
        if (std::find(right.begin(), right.end(), m) != right.end()) {
            throw std::invalid_argument("Partition: sides must be disjoint");
        }
    }
}

std::vector<Mode> Partition::all_modes() const {
    std::vector<Mode> modes = left;
    modes.insert(modes.end(), right.begin(), right.end());
    std::sort(modes.begin(), modes.end());
    return modes;
}

std::string Partition::name() const {
    std::string out;
    for (std::size_t k = 0; k < left.size(); ++k) out += to_string(left[k]);
    out += "-";
    for (std::size_t k = 0; k < right.size(); ++k) out += to_string(right[k]);
    return out;
}

Partition partition_from_string(const std::string& text) {
    for (const Partition& p : scenario_partitions()) {
        if (p.name() == text) return p;
    }
    throw std::invalid_argument("partition_from_string: expected one of A-I, A-II, I-II, got '" +
                                text + "'");
}

const std::vector<Partition>& scenario_partitions() {
    static const std::vector<Partition> partitions = {
        Partition{{Mode::A}, {Mode::I}},
        Partition{{Mode::A}, {Mode::II}},
        Partition{{Mode::I}, {Mode::II}},
    };
    return partitions;
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& cov, std::span<const int> side) {
    const int n = cov.n_modes();
    if (side.empty()) throw std::invalid_argument("partial_transpose: empty mode subset");
    std::vector<bool> flip(static_cast<std::size_t>(2 * n), false);
    for (int m : side) {
        if (m < 0 || m >= n) throw std::invalid_argument("partial_transpose: mode out of range");
        flip[static_cast<std::size_t>(p_index(m))] = true;
    }
    Eigen::MatrixXd out = cov.matrix();
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = 0; j < 2 * n; ++j) {
            // Sign flips are exact, so applying the transpose twice restores
            // the input bit for bit.
            if (flip[static_cast<std::size_t>(i)] != flip[static_cast<std::size_t>(j)]) {
                out(i, j) = -out(i, j);
            }
        }
    }
    return CovarianceMatrix::from_matrix(out);
}

double lambda_closed_form(double a, double b, double c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw std::invalid_argument("lambda_closed_form: entries must be finite");
    }
    if (a < 0.5 - 1e-12 || b < 0.5 - 1e-12) {
        throw std::invalid_argument("lambda_closed_form: diagonal entries must be >= 1/2");
    }
    // Entries grow like exp(2(s+r)); dividing by the largest one keeps every
    // intermediate representable across the whole accepted parameter range.
    const double t = std::max({a, b, std::abs(c)});
    const double as = a / t, bs = b / t, cs = c / t;
    // (ab - c^2)/t, formed without squaring the raw entries
    const double det_over_t = det2(a, c, cs, bs);
    if (!det2_resolvable(det_over_t, a, c, cs, bs)) {
        throw std::runtime_error(
            "lambda_closed_form: entries too large to resolve ab - c^2 in double precision");
    }
    const double sigma_s = as * as + bs * bs + 2.0 * cs * cs;
    const double diff = as - bs;
    // Sigma^2 - 4 det V factors as (a+b)^2 ((a-b)^2 + 4c^2); both factors are
    // nonnegative, so the discriminant never cancels.
    const double root_s = (as + bs) * std::sqrt(diff * diff + 4.0 * cs * cs);
    return std::abs(det_over_t) * std::sqrt(2.0 / (sigma_s + root_s));
}

double lambda_min_two_mode(const CovarianceMatrix& cov) {
    if (cov.n_modes() != 2) {
        throw std::invalid_argument("lambda_min_two_mode: need a two-mode covariance matrix");
    }
    const double t = std::max(0.5, cov.matrix().cwiseAbs().maxCoeff());
    const Eigen::MatrixXd vs = cov.matrix() / t;
    const double det_alpha = det2(vs(0, 0), vs(0, 1), vs(1, 0), vs(1, 1));
    const double det_beta = det2(vs(2, 2), vs(2, 3), vs(3, 2), vs(3, 3));
    const double det_gamma = det2(vs(0, 2), vs(0, 3), vs(1, 2), vs(1, 3));
    // det(gamma) enters negated: that is the partial transposition at the
    // level of symplectic invariants.
    const double delta_pt = det_alpha + det_beta - 2.0 * det_gamma;
    double det_s = 0.0, sqrt_det_s = 0.0;
    two_mode_det_scaled(vs, det_s, sqrt_det_s);
    return lambda_from_scaled_invariants(t, delta_pt, det_s, sqrt_det_s);
}

EntanglementReport log_negativity(const CovarianceMatrix& cov, const Partition& partition) {
    partition.validate();
    if (partition.left.size() != 1 || partition.right.size() != 1) {
        throw std::invalid_argument(
            "log_negativity: only one-mode-vs-one-mode partitions are supported");
    }
    if (cov.n_modes() != 2) {
        throw std::invalid_argument("log_negativity: need the two-mode marginal of the partition");
    }
    EntanglementReport report;
    report.partition = partition;
    report.lambda_min = lambda_min_two_mode(cov);
    report.e_n = std::max(0.0, -std::log(2.0 * report.lambda_min));
    report.separable = report.lambda_min >= 0.5 - kSeparabilityBand;
    report.boundary = std::abs(report.lambda_min - 0.5) <= kSeparabilityBand;
    return report;
}

double purity(const CovarianceMatrix& cov) {
    // 1/(2^n sqrt(det V)). Two-mode states get a factorization-free path:
    // a Cholesky-backed spectrum needs the matrix to be numerically positive
    // definite, which strongly squeezed marginals stop being long before
    // their determinant degrades.
    if (cov.n_modes() == 2) {
        const double t = std::max(0.5, cov.matrix().cwiseAbs().maxCoeff());
        double det_s = 0.0, sqrt_det_s = 0.0;
        two_mode_det_scaled(cov.matrix() / t, det_s, sqrt_det_s);
        if (sqrt_det_s <= 0.0) {
            throw std::runtime_error("purity: nonpositive determinant");
        }
        return 1.0 / (4.0 * t * t * sqrt_det_s);
    }
    const std::vector<double> nu = symplectic_eigenvalues(cov);
    double value = 1.0;
    for (double v : nu) value /= 2.0 * v;
    return value;
}

} // namespace rindler
