#pragma once

#include <optional>
#include <string>
#include <utility>

#include "isodens/geometry.hpp"

#include <nlohmann/json.hpp>

namespace isodens {

enum class DensityKind { Strip, Ball, Line, HalfSpace, GaussMod, Cone, Constant };

std::string to_string(DensityKind kind);
DensityKind density_kind_from_string(const std::string& name);

/// Planar density model. Piecewise-constant kinds carry the jump value
/// lambda; gauss-mod is exp(-x^p - y^q) with the exponent pair (p, q);
/// cone is f(x,y) = |(x,y)|. Evaluation on the jump interface takes the
/// lower of the two one-sided values (lower semicontinuity).
struct Density {
    DensityKind kind = DensityKind::Constant;
    double lambda = 1.0;
    // gauss-mod exponent pair; fixed to (2, 4) throughout.
    double exponent_x = 2.0;
    double exponent_y = 4.0;

    static Density strip(double lambda);
    static Density ball(double lambda);
    static Density line(double lambda);
    static Density half_space(double lambda);
    static Density gauss_mod();
    static Density cone();
    static Density constant();

    bool piecewise() const;

    nlohmann::json to_json() const;
    static Density from_json(const nlohmann::json& j);
};

/// Distance below which a point counts as lying on the jump interface.
inline constexpr double kInterfaceTol = 1e-12;

/// Point evaluation; lower one-sided value on the interface.
double evaluate(const Density& density, const Vec2& point);

/// One-sided limits across the jump interface at a point on it, ordered
/// f_minus <= f_plus. The normal direction selects which geometric side is
/// probed but the returned pair is always sorted.
/// Throws PointNotOnInterface if the point is off the interface, DomainError
/// for smooth kinds or a normal tangent to the interface.
std::pair<double, double> side_limits(const Density& density, const Vec2& point,
                                      const Vec2& normal);

/// Total weighted mass of the plane. Finite only for gauss-mod; nullopt
/// flags an infinite mass.
std::optional<double> total_mass(const Density& density);

/// Signed distance to the jump interface (negative on the low-density side
/// where that is well defined); only valid for piecewise kinds.
double interface_distance(const Density& density, const Vec2& point);

/// Gradient of psi = log f for smooth kinds (gauss-mod, cone, constant).
Vec2 log_density_gradient(const Density& density, const Vec2& point);

}  // namespace isodens
