#pragma once

#include <string>
#include <vector>

#include "isodens/strip.hpp"  // ProfilePoint, CrossoverReport

namespace isodens::ball {

// ---- lambda > 1 (density lambda outside the unit ball) ----

/// Round ball away from B: P = 2 sqrt(pi v).
double profile_a(double v);

/// Round ball concentric with and containing B: P = 2 pi sqrt(v/pi + 1 - lambda),
/// v >= lambda pi.
double profile_big(double v, double lambda);

enum class ShapeB { Convex, Chord, Nonconvex };
std::string to_string(ShapeB shape);

struct LensProfile {
    double area;
    double perimeter;
    ShapeB shape_class;
};

/// Lens against the unit circle: boundary is the arc of the unit circle of
/// angular half-width alpha about (1, 0) plus the outer arc meeting it at
/// the Snell limit angle beta0 = acos(1/lambda). The outer-arc curvature is
/// signed: with beta = alpha + beta0 the shape is convex for beta < pi,
/// a chord at beta = pi and nonconvex beyond.
LensProfile profile_b(double alpha, double lambda);

/// Min over the grid of psi(t) - pi with psi(t) = sqrt(1-t^2) + (pi - acos t)/t.
double psi_check(const std::vector<double>& t_grid);

/// Volume where the external-ball and lens perimeters cross (lambda > 1).
CrossoverReport crossover_gt1(double lambda);

/// Isoperimetric ratio limit of the lens as alpha -> 0, by Richardson
/// extrapolation; tends to 4 sin(b0) (1 + (pi - b0)/(sin(b0) cos(b0))).
double lens_small_area_ratio(double lambda);

// ---- lambda in (0, 1) (density lambda outside the unit ball) ----

/// Round ball inside B: P = 2 sqrt(lambda pi v), 0 < v <= lambda pi.
double profile_A(double v, double lambda);

/// Unit-circle arc plus an external arc, parametrized by the half-angle beta
/// of the external arc; alpha = beta + acos(lambda), r = sin(alpha)/sin(beta).
/// Domain (0, pi - acos(lambda)]; the upper endpoint is the degenerate
/// full-ball limit (lambda pi, 2 lambda pi), evaluated exactly since r = 0.
ProfilePoint profile_B(double beta, double lambda);

/// Ball meeting the unit circle orthogonally; beta_hat in (0, pi/2) is the
/// half-angle its inside-B boundary subtends at its own center; radius
/// 1/tan(beta_hat).
ProfilePoint profile_C(double beta_hat, double lambda);

struct CrossoverLt1 {
    CrossoverReport v1;  // first area above lambda pi where C matches B
    CrossoverReport v2;  // last such area
    bool coincide;       // |v1 - v2| below tolerance
};

CrossoverLt1 crossover_lt1(double lambda);

/// Min over the grid of f(lambda) = acos(lambda) - sqrt(1-lambda^2) + 1 - lambda.
double f_lambda_check(const std::vector<double>& grid);

/// Area attained by the lens at contact half-angle alpha (exposed for
/// inversion and scans).
double lens_area(double alpha, double lambda);

/// Inverts the lens area map over alpha in (0, pi).
double lens_alpha_for_area(double v, double lambda);

/// Inverts profile_B's area map over beta.
double beta_for_area_B(double v, double lambda);

/// Inverts profile_C's area map over beta_hat.
double beta_hat_for_area_C(double v, double lambda);

}  // namespace isodens::ball
