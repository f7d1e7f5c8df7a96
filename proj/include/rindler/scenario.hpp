// scenario.hpp — the physical scenario: a two-mode squeezed vacuum with one
// mode viewed by a uniformly accelerated observer

#pragma once

#include "rindler/covariance.hpp"

#include <stdexcept>

namespace rindler {

// The only physical inputs: the initial squeezing s between Alice's mode
// and Rob's mode, and the acceleration parameter r of the Unruh channel.
// Both are dimensionless and non-negative. r would follow from a proper
// acceleration via tanh r = exp(-2*pi*Omega); that mapping is out of scope
// and r is taken as primitive.
//
// Usable range: covariance entries grow like exp(2(s + r)), so inputs with
// 2(s + r) > 700 would overflow double precision and are rejected rather
// than producing infinities. Covariance matrices stay exact to a relative
// ulp across the accepted range; quantities that cancel entries against
// each other (the PT spectrum, purity) stop being resolvable earlier and
// refuse explicitly, see the entanglement module.
struct ScenarioParams {
    double s = 0.0;
    double r = 0.0;

    void validate() const;
};

// Scalars of the closed-form (A, I) covariance block,
//   [[a, 0, -c, 0], [0, a, 0, c], [-c, 0, b, 0], [0, c, 0, b]]
// with a = cosh(2s)/2, b = cosh^2(r) cosh^2(s) - 1/2, c = sinh(2s) cosh(r)/2.
struct AliceRobEntries {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

AliceRobEntries analytic_entries(const ScenarioParams& params);

// The full three-mode state: the (I, II) squeezer of the Unruh channel
// applied after the (A, I) squeezer, both acting on the three-mode vacuum.
// Returns the 6x6 covariance matrix.
CovarianceMatrix build_scenario_state(const ScenarioParams& params);

} // namespace rindler
