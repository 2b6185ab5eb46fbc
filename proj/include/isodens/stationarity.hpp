#pragma once

#include <vector>

#include "isodens/density.hpp"
#include "isodens/geometry.hpp"

namespace isodens {

/// A boundary corner on the jump interface. Angles are measured between the
/// boundary tangent and the interface tangent on each side, in [0, pi].
struct CornerSample {
    Vec2 point;
    double f_minus = 1.0;
    double f_plus = 1.0;
    double alpha_minus = 0.0;  // angle on the low-density side
    double alpha_plus = 0.0;   // angle on the high-density side
};

/// Residual of the refraction law cos(a+)/cos(a-) = f-/f+ at a transversal
/// interface crossing. When cos(alpha_minus) vanishes the residual is
/// cos(alpha_plus) itself (both sides orthogonal is the consistent limit).
double snell_residual(const CornerSample& corner);

/// Equivalent sine form of the refraction law: sin(gamma_plus) =
/// (f_minus/f_plus) sin(gamma_minus) with gamma = pi/2 - alpha the
/// complementary angles. Zero iff the cosine form is zero.
double snell_residual_sine_form(double gamma_minus, double gamma_plus,
                                double f_minus, double f_plus);

struct BoundCheck {
    bool pass = false;
    double margin = 0.0;  // bound minus angle; nonnegative on pass
    double bound = 0.0;
};

/// Checks the contact-angle bound for a boundary piece inside the region of
/// density f_i meeting the interface: the contact angle may not exceed
/// arccos(f_minus / f_i).
BoundCheck tangential_bound_check(double f_minus, double f_i, double contact_angle,
                                  double tolerance = 1e-9);

/// A sampled smooth boundary piece. Normals must be unit length; the density
/// supplies the log-gradient term of the generalized curvature.
struct CurveSample {
    std::vector<Vec2> points;
    std::vector<Vec2> normals;
};

struct CurvatureReport {
    std::vector<double> values;  // H_psi at interior sample points
    double mean = 0.0;
    double max_deviation = 0.0;
    bool constant = false;
};

/// Generalized mean curvature H_psi = H - <grad psi, nu> at each interior
/// sample point, with H from the three-point circumcircle through the
/// neighbors, signed positive when the curve bends away from nu.
/// Flags constancy when max deviation < tol * (1 + |mean|).
CurvatureReport generalized_curvature(const CurveSample& curve, const Density& density,
                                      double tol = 1e-9);

}  // namespace isodens
