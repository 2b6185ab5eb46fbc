#include "isodens/stationarity.hpp"

#include <algorithm>
#include <cmath>

#include "isodens/errors.hpp"

namespace isodens {

double snell_residual(const CornerSample& corner) {
    const double cm = std::cos(corner.alpha_minus);
    const double cp = std::cos(corner.alpha_plus);
    // Orthogonal low-side crossing: the law degenerates to cos(alpha_plus)=0,
    // so report that cosine directly.
    if (std::abs(cm) < 1e-12) return cp;
    return cp / cm - corner.f_minus / corner.f_plus;
}

double snell_residual_sine_form(double gamma_minus, double gamma_plus,
                                double f_minus, double f_plus) {
    return std::sin(gamma_plus) - (f_minus / f_plus) * std::sin(gamma_minus);
}

BoundCheck tangential_bound_check(double f_minus, double f_i, double contact_angle,
                                  double tolerance) {
    if (!(f_minus > 0.0) || f_i < f_minus)
        throw DomainError("tangential_bound_check: need f_i >= f_minus > 0");
    BoundCheck r;
    r.bound = std::acos(f_minus / f_i);
    r.margin = r.bound - contact_angle;
    r.pass = contact_angle <= r.bound + tolerance;
    return r;
}

namespace {

// Signed curvature at b from the circumcircle through a, b, c; positive when
// the center lies opposite the normal nu.
double circumcircle_curvature(const Vec2& a, const Vec2& b, const Vec2& c,
                              const Vec2& nu) {
    const Vec2 u = b - a;
    const Vec2 v = c - b;
    const Vec2 w = c - a;
    const double area2 = cross(u, v);
    const double lu = u.norm();
    const double lv = v.norm();
    const double lw = w.norm();
    const double denom = lu * lv * lw;
    if (denom == 0.0) throw DomainError("generalized_curvature: repeated points");
    const double k_signed = 2.0 * area2 / denom;
    if (std::abs(k_signed) < 1e-300) return 0.0;
    // Left normal of the traversal direction; the center lies on the side
    // given by the sign of the turn.
    const Vec2 t = w.normalized();
    const Vec2 left{-t.y, t.x};
    const double side = dot(left, nu);
    if (side == 0.0) throw DomainError("generalized_curvature: normal tangent to curve");
    return -k_signed * (side > 0.0 ? 1.0 : -1.0);
}

}  // namespace

CurvatureReport generalized_curvature(const CurveSample& curve, const Density& density,
                                      double tol) {
    const std::size_t n = curve.points.size();
    if (n < 5) throw InsufficientPoints("generalized_curvature: need at least 5 points");
    if (curve.normals.size() != n)
        throw InvalidSpec("generalized_curvature: one normal per point required");
    for (const Vec2& nu : curve.normals)
        if (std::abs(nu.norm() - 1.0) > 1e-12)
            throw InvalidSpec("generalized_curvature: normals must be unit length");

    CurvatureReport report;
    report.values.reserve(n - 2);
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const Vec2& p = curve.points[i];
        const Vec2& nu = curve.normals[i];
        const double h = circumcircle_curvature(curve.points[i - 1], p,
                                                curve.points[i + 1], nu);
        const Vec2 grad_psi = log_density_gradient(density, p);
        const double value = h - dot(grad_psi, nu);
        report.values.push_back(value);
        sum += value;
    }
    report.mean = sum / static_cast<double>(report.values.size());
    double dev = 0.0;
    for (double v : report.values) dev = std::max(dev, std::abs(v - report.mean));
    report.max_deviation = dev;
    report.constant = dev < tol * (1.0 + std::abs(report.mean));
    return report;
}

}  // namespace isodens
