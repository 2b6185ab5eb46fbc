#include "isodens/density.hpp"

#include <algorithm>
#include <cmath>

#include "isodens/errors.hpp"
#include "isodens/special.hpp"

namespace isodens {

std::string to_string(DensityKind kind) {
    switch (kind) {
        case DensityKind::Strip: return "strip";
        case DensityKind::Ball: return "ball";
        case DensityKind::Line: return "line";
        case DensityKind::HalfSpace: return "half-space";
        case DensityKind::GaussMod: return "gauss-mod";
        case DensityKind::Cone: return "cone";
        case DensityKind::Constant: return "constant";
    }
    throw InvalidSpec("unknown density kind");
}

DensityKind density_kind_from_string(const std::string& name) {
    if (name == "strip") return DensityKind::Strip;
    if (name == "ball") return DensityKind::Ball;
    if (name == "line") return DensityKind::Line;
    if (name == "half-space") return DensityKind::HalfSpace;
    if (name == "gauss-mod") return DensityKind::GaussMod;
    if (name == "cone") return DensityKind::Cone;
    if (name == "constant") return DensityKind::Constant;
    throw InvalidSpec("unknown density kind: " + name);
}

namespace {

void validate_lambda(DensityKind kind, double lambda) {
    if (kind == DensityKind::Ball) {
        if (!(lambda > 0.0) || lambda == 1.0)
            throw DomainError("ball density needs lambda > 0, lambda != 1");
    } else {
        if (!(lambda > 1.0))
            throw DomainError(to_string(kind) + " density needs lambda > 1");
    }
}

}  // namespace

Density Density::strip(double lambda) {
    validate_lambda(DensityKind::Strip, lambda);
    return {DensityKind::Strip, lambda};
}

Density Density::ball(double lambda) {
    validate_lambda(DensityKind::Ball, lambda);
    return {DensityKind::Ball, lambda};
}

Density Density::line(double lambda) {
    validate_lambda(DensityKind::Line, lambda);
    return {DensityKind::Line, lambda};
}

Density Density::half_space(double lambda) {
    validate_lambda(DensityKind::HalfSpace, lambda);
    return {DensityKind::HalfSpace, lambda};
}

Density Density::gauss_mod() { return {DensityKind::GaussMod, 1.0, 2.0, 4.0}; }
Density Density::cone() { return {DensityKind::Cone}; }
Density Density::constant() { return {DensityKind::Constant}; }

bool Density::piecewise() const {
    switch (kind) {
        case DensityKind::Strip:
        case DensityKind::Ball:
        case DensityKind::Line:
        case DensityKind::HalfSpace:
            return true;
        default:
            return false;
    }
}

nlohmann::json Density::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind);
    if (piecewise()) j["lambda"] = lambda;
    if (kind == DensityKind::GaussMod)
        j["params"] = {exponent_x, exponent_y};
    return j;
}

Density Density::from_json(const nlohmann::json& j) {
    const DensityKind kind = density_kind_from_string(j.at("kind").get<std::string>());
    switch (kind) {
        case DensityKind::Strip: return strip(j.at("lambda").get<double>());
        case DensityKind::Ball: return ball(j.at("lambda").get<double>());
        case DensityKind::Line: return line(j.at("lambda").get<double>());
        case DensityKind::HalfSpace: return half_space(j.at("lambda").get<double>());
        case DensityKind::GaussMod: {
            Density d = gauss_mod();
            if (j.contains("params")) {
                d.exponent_x = j["params"].at(0).get<double>();
                d.exponent_y = j["params"].at(1).get<double>();
            }
            return d;
        }
        case DensityKind::Cone: return cone();
        case DensityKind::Constant: return constant();
    }
    throw InvalidSpec("unknown density kind");
}

double interface_distance(const Density& density, const Vec2& p) {
    switch (density.kind) {
        case DensityKind::Strip: return std::abs(p.y) - 1.0;
        case DensityKind::Ball: return p.norm() - 1.0;
        case DensityKind::Line: return std::abs(p.y);
        case DensityKind::HalfSpace: return p.y;
        default:
            throw DomainError("interface_distance: density has no jump interface");
    }
}

double evaluate(const Density& density, const Vec2& p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw DomainError("evaluate: point must be finite");
    switch (density.kind) {
        case DensityKind::Strip:
            // value 1 on |y| = 1 by definition, also the lower value
            return std::abs(p.y) <= 1.0 + kInterfaceTol ? 1.0 : density.lambda;
        case DensityKind::Ball: {
            const double r = p.norm();
            // lambda inside the unit ball, 1 outside
            if (std::abs(r - 1.0) <= kInterfaceTol)
                return std::min(1.0, density.lambda);
            return r < 1.0 ? density.lambda : 1.0;
        }
        case DensityKind::Line:
            return std::abs(p.y) <= kInterfaceTol ? 1.0 : density.lambda;
        case DensityKind::HalfSpace:
            return p.y <= kInterfaceTol ? 1.0 : density.lambda;
        case DensityKind::GaussMod:
            return std::exp(-std::pow(std::abs(p.x), density.exponent_x) -
                            std::pow(std::abs(p.y), density.exponent_y));
        case DensityKind::Cone:
            return p.norm();
        case DensityKind::Constant:
            return 1.0;
    }
    throw InvalidSpec("unknown density kind");
}

std::pair<double, double> side_limits(const Density& density, const Vec2& point,
                                      const Vec2& normal) {
    if (!density.piecewise())
        throw DomainError("side_limits: density has no jump interface");
    if (std::abs(interface_distance(density, point)) > kInterfaceTol)
        throw PointNotOnInterface("side_limits: point is off the jump interface");

    Vec2 interface_normal;
    switch (density.kind) {
        case DensityKind::Strip:
            interface_normal = {0.0, point.y >= 0.0 ? 1.0 : -1.0};
            break;
        case DensityKind::Ball:
            interface_normal = point.normalized();
            break;
        case DensityKind::Line:
        case DensityKind::HalfSpace:
            interface_normal = {0.0, 1.0};
            break;
        default:
            break;
    }
    if (std::abs(dot(normal.normalized(), interface_normal)) < 1e-12)
        throw DomainError("side_limits: normal is tangent to the interface");

    const double lo = std::min(1.0, density.lambda);
    const double hi = std::max(1.0, density.lambda);
    return {lo, hi};
}

std::optional<double> total_mass(const Density& density) {
    switch (density.kind) {
        case DensityKind::GaussMod:
            // int exp(-x^2) dx * int exp(-y^4) dy = sqrt(pi) * Gamma(1/4)/2
            return std::sqrt(M_PI) * 0.5 * gamma_fn(0.25);
        default:
            return std::nullopt;
    }
}

Vec2 log_density_gradient(const Density& density, const Vec2& p) {
    switch (density.kind) {
        case DensityKind::GaussMod:
            return {-2.0 * p.x, -4.0 * p.y * p.y * p.y};
        case DensityKind::Cone: {
            const double r2 = p.norm2();
            if (r2 == 0.0) throw DomainError("log_density_gradient: cone apex");
            return {p.x / r2, p.y / r2};
        }
        case DensityKind::Constant:
            return {0.0, 0.0};
        default:
            throw DomainError("log_density_gradient: density not smooth");
    }
}

}  // namespace isodens
