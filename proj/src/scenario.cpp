#include "rindler/scenario.hpp"

#include "rindler/symplectic.hpp"

#include <cmath>
#include <stdexcept>

namespace rindler {

void ScenarioParams::validate() const {
    if (!std::isfinite(s) || !std::isfinite(r)) {
        throw std::invalid_argument("ScenarioParams: s and r must be finite");
    }
    if (s < 0.0 || r < 0.0) {
        throw std::invalid_argument("ScenarioParams: s and r must be >= 0");
    }
    if (2.0 * (s + r) > 700.0) {
        throw std::invalid_argument(
            "ScenarioParams: 2(s + r) > 700 overflows double-precision cosh");
    }
}

AliceRobEntries analytic_entries(const ScenarioParams& params) {
    params.validate();
    const double ch_r = std::cosh(params.r);
    const double ch_s = std::cosh(params.s);
    AliceRobEntries e;
    e.a = 0.5 * std::cosh(2.0 * params.s);
    e.b = ch_r * ch_r * ch_s * ch_s - 0.5;
    e.c = 0.5 * std::sinh(2.0 * params.s) * ch_r;
    return e;
}

CovarianceMatrix build_scenario_state(const ScenarioParams& params) {
    params.validate();
    // Compose the two squeezers before touching the vacuum; one product
    // fewer keeps the roundoff on the pure state as small as possible.
    const SymplecticMap pipeline = SymplecticMap::from_matrix(
        unruh_map(params.r).matrix() * two_mode_squeezer(params.s, Mode::A, Mode::I, 3).matrix());
    return apply(pipeline, CovarianceMatrix::vacuum(3));
}

} // namespace rindler
