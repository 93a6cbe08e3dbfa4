#pragma once

// Independent slow-but-sure computations used only by tests: numeric
// integration where the library uses closed forms, and exhaustive GF(2)
// span checks where the library uses kernel algebra.

#include <cstdint>
#include <functional>
#include <vector>

#include "conewright/polyhedron.hpp"

namespace cw::oracle {

// Adaptive Simpson rule with Richardson correction; tol is absolute.
double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_depth = 45);

// The clover-area function via direct quadrature of -log|2 sin u|, with a
// series head for the integrable endpoint singularity.
double lobachevsky_quadrature(double theta, double tol = 1e-12);

// Volume over the polyhedron by polar column integration around the origin:
// each ray sees the hemisphere envelope as a closed-form column integral,
// leaving one angular quadrature.  Valid for non-holed shapes with t > 0.
double structure_volume_quadrature(const TrapezohedronGeometry& g, double tol = 1e-10);

// Membership of target in the GF(2) span of the given vectors.
bool gf2_in_span(const std::vector<std::vector<uint8_t>>& span, const std::vector<uint8_t>& target);

}  // namespace cw::oracle
