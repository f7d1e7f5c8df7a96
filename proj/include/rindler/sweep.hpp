// sweep.hpp — grid evaluation, deterministic CSV output, the built-in
// figure-2 style sweep, and the Fock-oracle verification driver

#pragma once

#include "rindler/entanglement.hpp"
#include "rindler/scenario.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rindler::sweep {

struct SweepSpec {
    std::vector<double> s_values;
    double r_min = 0.0;
    double r_max = 0.0;
    double r_step = 0.0;
    std::vector<Partition> partitions; // empty means all three

    void validate() const;
    std::vector<double> r_values() const;
    const std::vector<Partition>& effective_partitions() const;
};

struct ResultRow {
    double s = 0.0;
    double r = 0.0;
    Partition partition;
    double lambda_min = 0.0;
    double e_n = 0.0;
    bool separable = true;
    double purity_marginal = 0.0;
};

// One row per (s, r, partition), ordered s-major, then r, then partition.
// Grid points evaluate independently (parallel across rows); each row is
// computed serially, so output is deterministic for a given spec.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

// Single-point evaluation: three partition rows in canonical order.
std::vector<ResultRow> evaluate_point(const ScenarioParams& params);

// Locale-independent CSV: '#'-prefixed header comments echoing the spec and
// the conventions, then `s,r,partition,lambda_min,e_n,separable,purity`.
// Floats use shortest-exact 17-significant-digit formatting, '.' decimal
// separator, '\n' line endings; separable is 1 or 0. Byte-identical output
// for identical specs.
void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<ResultRow>& rows);

// 17-significant-digit float formatting used everywhere in CSV output.
std::string format_double(double value);

// The built-in figure sweep: s in {0.5, 1.0, 1.5} (artifact choices, the
// published figure's values are not legible), r in [0, 3] step 0.02,
// partition A-I only.
SweepSpec figure2_spec();

// Minimal standalone SVG polyline plot of e_n versus r, one curve per
// s value of the A-I rows.
std::string render_svg(const std::vector<ResultRow>& rows);

// ---------------------------------------------------------------------------
// Fock-oracle verification

struct VerifyPoint {
    double s = 0.0;
    double r = 0.0;
    double max_cov_dev = 0.0;   // worst |V_fock - V_gaussian| entry
    int worst_row = 0;
    int worst_col = 0;
    double max_en_dev = 0.0;    // worst |E_N(fock) - E_N(gaussian)| over partitions
    std::string worst_partition;
};

struct VerifyReport {
    std::vector<VerifyPoint> points;
    double cov_tolerance = 1e-6;
    double en_tolerance = 1e-4;
    bool pass = false;

    const VerifyPoint& worst_cov_point() const;
    const VerifyPoint& worst_en_point() const;
};

// Rebuilds every grid point (s, r in {0, 0.25, ...} up to the maxima) in the
// truncated Fock basis and compares all covariance entries and all three
// bipartite log-negativities against the Gaussian pipeline.
VerifyReport run_verification(double s_max, double r_max, int cutoff);

} // namespace rindler::sweep
