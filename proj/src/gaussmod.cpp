#include "isodens/gaussmod.hpp"

#include <cmath>

#include "isodens/errors.hpp"
#include "isodens/rootfind.hpp"
#include "isodens/special.hpp"

namespace isodens::gaussmod {

ProfilePoint horizontal_profile(double y) {
    if (!(y >= 0.0)) throw DomainError("horizontal_profile: need y >= 0");
    const double y4 = y * y * y * y;
    return {0.25 * std::sqrt(M_PI) * upper_incomplete_gamma(0.25, y4),
            std::sqrt(M_PI) * std::exp(-y4)};
}

ProfilePoint vertical_profile(double x) {
    if (!(x >= 0.0)) throw DomainError("vertical_profile: need x >= 0");
    const double g54 = gamma_fn(1.25);
    return {std::sqrt(M_PI) * g54 * (1.0 - erf(x)), 2.0 * g54 * std::exp(-x * x)};
}

double equal_volume_x(double y) {
    if (!(y >= 0.0)) throw DomainError("equal_volume_x: need y >= 0");
    const double rhs =
        1.0 - upper_incomplete_gamma(0.25, y * y * y * y) / (4.0 * gamma_fn(1.25));
    if (rhs <= 0.0) return 0.0;
    auto f = [rhs](double x) { return erf(x) - rhs; };
    auto df = [](double x) { return 2.0 / std::sqrt(M_PI) * std::exp(-x * x); };
    const double hi = 7.0;
    if (!(f(hi) > 0.0))
        throw ConvergenceFailure("equal_volume_x: offset beyond invertible range");
    return newton_safeguarded(f, df, 0.0, hi, 1e-14);
}

double dominance_constant() {
    return std::log(std::sqrt(M_PI) / (2.0 * gamma_fn(1.25)));
}

double dominance_margin(double y) {
    const double x = equal_volume_x(y);
    return -x * x + y * y * y * y - dominance_constant();
}

CrossoverReport crossover_y() {
    const double lo = 0.15;
    const double hi = 0.16;
    if (!(dominance_margin(lo) > 0.0 && dominance_margin(hi) < 0.0))
        throw ConvergenceFailure("crossover_y: no sign change in (0.15, 0.16)");
    const double y = bisect(dominance_margin, lo, hi, 1e-12, 0.0);
    return {y, horizontal_profile(y).perimeter, lo, hi};
}

}  // namespace isodens::gaussmod
