#include <doctest.h>

#include <cmath>

#include "isodens/density.hpp"
#include "isodens/errors.hpp"
#include "isodens/stationarity.hpp"

using namespace isodens;

TEST_CASE("snell residual") {
    // refraction angles satisfying cos(a+)/cos(a-) = f-/f+
    const double f_minus = 1.0, f_plus = 2.0;
    const double a_minus = 0.7;
    const double a_plus = std::acos(std::cos(a_minus) * f_minus / f_plus);
    CHECK(snell_residual({{0, 0}, f_minus, f_plus, a_minus, a_plus}) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(snell_residual({{0, 0}, f_minus, f_plus, a_minus, a_plus + 0.1}) < 0.0);

    // both orthogonal: residual degenerates to cos(a+)
    CHECK(snell_residual({{0, 0}, 1.0, 2.0, 0.5 * M_PI, 0.5 * M_PI}) ==
          doctest::Approx(std::cos(0.5 * M_PI)));

    // sine form agrees at the root
    CHECK(snell_residual_sine_form(0.5 * M_PI - a_minus, 0.5 * M_PI - a_plus, f_minus,
                                   f_plus) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("tangential bound") {
    const BoundCheck ok = tangential_bound_check(1.0, 2.0, 0.5);
    CHECK(ok.pass);
    CHECK(ok.bound == doctest::Approx(std::acos(0.5)));
    const BoundCheck bad = tangential_bound_check(1.0, 2.0, 1.2);
    CHECK_FALSE(bad.pass);
    CHECK(bad.margin < 0.0);
}

namespace {

CurveSample circle_sample(Vec2 center, double radius, int n) {
    CurveSample s;
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * M_PI * i / n;
        const Vec2 nu{std::cos(t), std::sin(t)};
        s.points.push_back(center + nu * radius);
        s.normals.push_back(nu);
    }
    return s;
}

}  // namespace

TEST_CASE("curvature of a circle under constant density") {
    const CurvatureReport r =
        generalized_curvature(circle_sample({0.0, 0.0}, 2.0, 500), Density::constant());
    CHECK(r.constant);
    CHECK(r.mean == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("lines have constant generalized curvature, off-center circles do not") {
    const Density gm = Density::gauss_mod();
    CurveSample vline;
    for (int i = 0; i < 200; ++i) {
        vline.points.push_back({0.7, -2.0 + 4.0 * i / 199.0});
        vline.normals.push_back({1.0, 0.0});
    }
    const CurvatureReport rv = generalized_curvature(vline, gm);
    CHECK(rv.max_deviation < 1e-12);
    CHECK(rv.mean == doctest::Approx(1.4));  // -<grad psi, nu> = 2x

    const CurvatureReport rc =
        generalized_curvature(circle_sample({0.5, 0.0}, 1.0, 500), gm);
    CHECK_FALSE(rc.constant);
    CHECK(rc.max_deviation > 0.1);
}

TEST_CASE("curvature input validation") {
    CurveSample few = circle_sample({0, 0}, 1.0, 4);
    CHECK_THROWS_AS(generalized_curvature(few, Density::constant()),
                    InsufficientPoints);
    CurveSample bad = circle_sample({0, 0}, 1.0, 10);
    bad.normals[3] = {2.0, 0.0};
    CHECK_THROWS_AS(generalized_curvature(bad, Density::constant()), InvalidSpec);
}
