// Built-in datasets: the two Riemann-Roch surface presets and the standard curve
// configurations.
#pragma once

#include "t237/config.hpp"
#include "t237/riemann_roch.hpp"

namespace t237 {

// chi(O) = 2, K^2 = 1/143, quotient singularities 1/13(1,6) and 1/11(1,7),
// canonical polarization.
SurfaceRRData theorem43_data();

// chi(O) = 2, (K+D)^2 = 1/42, K ~ 0, D through 1/2(1,1), 1/3(1,2), 1/7(1,6) with
// end-transversal incidence.
SurfaceRRData theorem44_data();

// Ten (-2)-curves Theta0..Theta9: chain 0-1-...-8 with Theta9 attached to Theta6.
CurveConfig t237_config();

// Eleven curves Theta0..Theta5, E, Theta6..Theta9 with Theta5^2 = Theta6^2 = -3 and
// E^2 = -1; chain through E with Theta9 attached to Theta6.
CurveConfig type1_config();

}  // namespace t237
