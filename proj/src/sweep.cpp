#include "rindler/sweep.hpp"

#include "rindler/fock.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rindler::sweep {

namespace {

EntanglementReport report_for(const CovarianceMatrix& state, const Partition& partition) {
    const std::vector<Mode> modes = partition.all_modes();
    std::vector<int> idx;
    idx.reserve(modes.size());
    for (Mode m : modes) idx.push_back(mode_index(m));
    return log_negativity(marginal(state, std::span<const int>(idx)), partition);
}

ResultRow make_row(const CovarianceMatrix& state, double s, double r, const Partition& partition) {
    const std::vector<Mode> modes = partition.all_modes();
    std::vector<int> idx;
    idx.reserve(modes.size());
    for (Mode m : modes) idx.push_back(mode_index(m));
    const CovarianceMatrix sub = marginal(state, std::span<const int>(idx));
    ResultRow row;
    row.s = s;
    row.r = r;
    row.partition = partition;
    try {
        const EntanglementReport rep = log_negativity(sub, partition);
        row.lambda_min = rep.lambda_min;
        row.e_n = rep.e_n;
        row.separable = rep.separable;
        row.purity_marginal = purity(sub);
    } catch (const std::runtime_error&) {
        // far outside the resolvable domain: mark the row instead of aborting
        // the whole sweep
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.lambda_min = nan;
        row.e_n = nan;
        row.separable = false;
        row.purity_marginal = nan;
    }
    return row;
}

} // namespace

void SweepSpec::validate() const {
    if (s_values.empty()) throw std::invalid_argument("SweepSpec: s_values must be non-empty");
    for (double s : s_values) ScenarioParams{s, 0.0}.validate();
    if (!(r_step > 0.0)) throw std::invalid_argument("SweepSpec: r_step must be > 0");
    if (r_min > r_max) throw std::invalid_argument("SweepSpec: r_min must be <= r_max");
    ScenarioParams{0.0, r_min}.validate();
    ScenarioParams{0.0, r_max}.validate();
    for (const Partition& p : partitions) p.validate();
}

std::vector<double> SweepSpec::r_values() const {
    const long count = static_cast<long>(std::floor((r_max - r_min) / r_step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) {
        out.push_back(r_min + static_cast<double>(k) * r_step);
    }
    return out;
}

const std::vector<Partition>& SweepSpec::effective_partitions() const {
    return partitions.empty() ? scenario_partitions() : partitions;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const std::vector<double> rs = spec.r_values();
    const std::vector<Partition>& parts = spec.effective_partitions();

    const long n_points = static_cast<long>(spec.s_values.size()) * static_cast<long>(rs.size());
    std::vector<ResultRow> rows(static_cast<std::size_t>(n_points) * parts.size());

    // Grid points are independent; each one is evaluated serially into its
    // own output slots, so row order and bytes never depend on scheduling.
#pragma omp parallel for schedule(static)
    for (long point = 0; point < n_points; ++point) {
        const std::size_t si = static_cast<std::size_t>(point) / rs.size();
        const std::size_t ri = static_cast<std::size_t>(point) % rs.size();
        const double s = spec.s_values[si];
        const double r = rs[ri];
        const CovarianceMatrix state = build_scenario_state({s, r});
        for (std::size_t pi = 0; pi < parts.size(); ++pi) {
            rows[static_cast<std::size_t>(point) * parts.size() + pi] =
                make_row(state, s, r, parts[pi]);
        }
    }
    return rows;
}

std::vector<ResultRow> evaluate_point(const ScenarioParams& params) {
    const CovarianceMatrix state = build_scenario_state(params);
    std::vector<ResultRow> rows;
    rows.reserve(3);
    for (const Partition& p : scenario_partitions()) {
        rows.push_back(make_row(state, params.s, params.r, p));
    }
    return rows;
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<ResultRow>& rows) {
    out << "# log-negativity of a two-mode squeezed vacuum under uniform acceleration\n";
    out << "# conventions: hbar = 1, vacuum quadrature variance 1/2, natural logarithm\n";
    out << "# sweep: s = [";
    for (std::size_t k = 0; k < spec.s_values.size(); ++k) {
        if (k > 0) out << ", ";
        out << format_double(spec.s_values[k]);
    }
    out << "]; r in [" << format_double(spec.r_min) << ", " << format_double(spec.r_max)
        << "] step " << format_double(spec.r_step) << "; partitions = ";
    const std::vector<Partition>& parts = spec.effective_partitions();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k > 0) out << ",";
        out << parts[k].name();
    }
    out << "\n";
    out << "s,r,partition,lambda_min,e_n,separable,purity\n";
    for (const ResultRow& row : rows) {
        out << format_double(row.s) << ',' << format_double(row.r) << ',' << row.partition.name()
            << ',' << format_double(row.lambda_min) << ',' << format_double(row.e_n) << ','
            << (row.separable ? '1' : '0') << ',' << format_double(row.purity_marginal) << '\n';
    }
}

SweepSpec figure2_spec() {
    SweepSpec spec;
    spec.s_values = {0.5, 1.0, 1.5};
    spec.r_min = 0.0;
    spec.r_max = 3.0;
    spec.r_step = 0.02;
    spec.partitions = {Partition{{Mode::A}, {Mode::I}}};
    return spec;
}

std::string render_svg(const std::vector<ResultRow>& rows) {
    // Group the A-I rows into one polyline per s value.
    std::vector<double> s_values;
    for (const ResultRow& row : rows) {
        if (row.partition.name() != "A-I") continue;
        if (std::find(s_values.begin(), s_values.end(), row.s) == s_values.end()) {
            s_values.push_back(row.s);
        }
    }
    if (s_values.empty()) throw std::invalid_argument("render_svg: no A-I rows");

    double r_max = 0.0;
    double e_max = 0.0;
    for (const ResultRow& row : rows) {
        if (row.partition.name() != "A-I") continue;
        r_max = std::max(r_max, row.r);
        e_max = std::max(e_max, row.e_n);
    }
    if (r_max <= 0.0) r_max = 1.0;
    if (e_max <= 0.0) e_max = 1.0;

    const double width = 720.0, height = 480.0;
    const double ml = 70.0, mr = 25.0, mt = 25.0, mb = 55.0;
    const double pw = width - ml - mr, ph = height - mt - mb;
    const auto px = [&](double r) { return ml + pw * r / r_max; };
    const auto py = [&](double e) { return mt + ph * (1.0 - e / e_max); };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
        << mt + ph << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
        << "\" stroke=\"black\"/>\n";
    for (int tick = 0; tick <= 6; ++tick) {
        const double r = r_max * tick / 6.0;
        const double e = e_max * tick / 6.0;
        svg << "<line x1=\"" << px(r) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(r) << "\" y2=\""
            << mt + ph + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << px(r) << "\" y=\"" << mt + ph + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << format_double(std::round(r * 100) / 100)
            << "</text>\n";
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(e) << "\" x2=\"" << ml << "\" y2=\""
            << py(e) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << ml - 10 << "\" y=\"" << py(e) + 4
            << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(std::round(e * 100) / 100)
            << "</text>\n";
    }
    svg << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
        << "\" font-size=\"14\" text-anchor=\"middle\">acceleration parameter r</text>\n";
    svg << "<text x=\"18\" y=\"" << mt + ph / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << mt + ph / 2
        << ")\">E_N (A-I)</text>\n";

    for (std::size_t ci = 0; ci < s_values.size(); ++ci) {
        svg << "<polyline fill=\"none\" stroke=\"" << colors[ci % 5] << "\" stroke-width=\"1.5\" points=\"";
        for (const ResultRow& row : rows) {
            if (row.partition.name() != "A-I" || row.s != s_values[ci]) continue;
            svg << px(row.r) << ',' << py(row.e_n) << ' ';
        }
        svg << "\"/>\n";
        svg << "<text x=\"" << ml + pw - 8 << "\" y=\"" << mt + 18 + 18 * static_cast<double>(ci)
            << "\" font-size=\"13\" text-anchor=\"end\" fill=\"" << colors[ci % 5] << "\">s = "
            << format_double(s_values[ci]) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

// ---------------------------------------------------------------------------

const VerifyPoint& VerifyReport::worst_cov_point() const {
    return *std::max_element(points.begin(), points.end(),
                             [](const VerifyPoint& a, const VerifyPoint& b) {
                                 return a.max_cov_dev < b.max_cov_dev;
                             });
}

const VerifyPoint& VerifyReport::worst_en_point() const {
    return *std::max_element(points.begin(), points.end(),
                             [](const VerifyPoint& a, const VerifyPoint& b) {
                                 return a.max_en_dev < b.max_en_dev;
                             });
}

VerifyReport run_verification(double s_max, double r_max, int cutoff) {
    if (cutoff < 16) throw std::invalid_argument("run_verification: cutoff must be >= 16");
    if (s_max < 0.0 || r_max < 0.0) {
        throw std::invalid_argument("run_verification: maxima must be >= 0");
    }
    // Refuse up front if the worst grid corner is beyond the cutoff's reach.
    const double corner_tail = fock::truncation_tail({s_max, r_max}, cutoff);
    if (corner_tail > fock::kMaxTruncationTail) {
        throw std::invalid_argument("run_verification: truncation tail " +
                                    std::to_string(corner_tail) + " at (s_max, r_max) exceeds " +
                                    std::to_string(fock::kMaxTruncationTail));
    }

    std::vector<double> grid_s, grid_r;
    for (double s = 0.0; s <= s_max + 1e-12; s += 0.25) grid_s.push_back(s);
    for (double r = 0.0; r <= r_max + 1e-12; r += 0.25) grid_r.push_back(r);

    VerifyReport report;
    report.points.resize(grid_s.size() * grid_r.size());

    const long n_points = static_cast<long>(report.points.size());
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < n_points; ++idx) {
        const double s = grid_s[static_cast<std::size_t>(idx) / grid_r.size()];
        const double r = grid_r[static_cast<std::size_t>(idx) % grid_r.size()];
        VerifyPoint point;
        point.s = s;
        point.r = r;

        const ScenarioParams params{s, r};
        const fock::TruncatedState psi = fock::build_state_fock(params, cutoff);
        const CovarianceMatrix v_fock = fock::covariance_from_state(psi);
        const CovarianceMatrix v_gauss = build_scenario_state(params);

        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                const double dev = std::abs(v_fock(i, j) - v_gauss(i, j));
                if (dev > point.max_cov_dev) {
                    point.max_cov_dev = dev;
                    point.worst_row = i;
                    point.worst_col = j;
                }
            }
        }

        for (const Partition& partition : scenario_partitions()) {
            const EntanglementReport gauss = report_for(v_gauss, partition);
            const std::vector<Mode> keep = partition.all_modes();
            const fock::DensityMatrix rho =
                fock::reduced_density(psi, std::span<const Mode>(keep));
            const double en_fock = fock::log_negativity_fock(rho, partition.left.front());
            const double dev = std::abs(en_fock - gauss.e_n);
            if (dev > point.max_en_dev) {
                point.max_en_dev = dev;
                point.worst_partition = partition.name();
            }
        }
        report.points[static_cast<std::size_t>(idx)] = point;
    }

    report.pass = true;
    for (const VerifyPoint& point : report.points) {
        if (point.max_cov_dev > report.cov_tolerance || point.max_en_dev > report.en_tolerance) {
            report.pass = false;
        }
    }
    return report;
}

} // namespace rindler::sweep
