#pragma once

#include "isodens/strip.hpp"  // ProfilePoint, CrossoverReport

namespace isodens::gaussmod {

/// Region {y' > y} under exp(-x^2 - y^4):
/// volume (sqrt(pi)/4) Gamma(1/4, y^4), perimeter sqrt(pi) e^{-y^4}.
ProfilePoint horizontal_profile(double y);

/// Region {x' > x}: volume sqrt(pi) Gamma(5/4) (1 - erf x),
/// perimeter 2 Gamma(5/4) e^{-x^2}.
ProfilePoint vertical_profile(double x);

/// The x >= 0 with vertical volume equal to the horizontal volume at offset y:
/// erf(x) = 1 - Gamma(1/4, y^4) / (4 Gamma(5/4)).
double equal_volume_x(double y);

/// -x(y)^2 + y^4 - log(sqrt(pi)/(2 Gamma(5/4))); negative exactly when the
/// vertical line has less perimeter at equal volume.
double dominance_margin(double y);

/// log(sqrt(pi)/(2 Gamma(5/4))), about -0.0225.
double dominance_constant();

/// Root of dominance_margin in (0.15, 0.16).
CrossoverReport crossover_y();

}  // namespace isodens::gaussmod
