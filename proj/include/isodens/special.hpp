#pragma once

#include <cmath>

namespace isodens {

/// Upper incomplete Gamma function  Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt.
/// Series below x < a+1, Lentz continued fraction above; relative accuracy
/// target 1e-12 on a in (0, 10].
double upper_incomplete_gamma(double a, double x);

/// Lower incomplete Gamma function  gamma(a, x) = Gamma(a) - Gamma(a, x).
double lower_incomplete_gamma(double a, double x);

/// Error function.
double erf(double x);

/// Complete Gamma function.
double gamma_fn(double a);

/// Circular arc of unit chord: parametrization by the central half-angle
/// theta in (0, pi). The chord-normalized radius is 1/(2 sin theta), the
/// area enclosed against the chord A(theta) and the arc length L(theta)
/// are both strictly increasing.
struct ArcParametrization {
    double theta;

    double radius() const { return 1.0 / (2.0 * std::sin(theta)); }
    double area() const;
    double length() const { return theta / std::sin(theta); }
    /// dA/dtheta, used by the Newton inversion.
    double area_derivative() const;
    /// dL/dtheta.
    double length_derivative() const;
};

/// Perimeter of the circular arc with unit chord enclosing area x >= 0
/// against the chord; arc(0) = 1, arc(pi/8) = pi/2, strictly increasing,
/// convex on [0, pi/8] and concave beyond.
double arc(double x);

/// dL/dA at the arc with enclosed area x > 0; arc_derivative(pi/8) = 2.
double arc_derivative(double x);

/// gamma - sin(gamma) cos(gamma), computed with a series near 0 so that the
/// cubic-order cancellation does not lose precision. Odd in gamma.
double circular_segment_area(double gamma);

}  // namespace isodens
