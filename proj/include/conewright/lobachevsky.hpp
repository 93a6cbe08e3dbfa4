#pragma once

namespace cw {

// The odd, pi-periodic function  L(theta) = -integral_0^theta log|2 sin u| du,
// evaluated by argument reduction plus a rapidly convergent power series.
// Accurate to ~1e-15 absolute over the real line.
double lobachevsky(double theta);

}  // namespace cw
