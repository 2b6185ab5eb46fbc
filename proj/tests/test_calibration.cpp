#include <doctest.h>

#include <cmath>

#include "isodens/calibration.hpp"
#include "isodens/errors.hpp"

using namespace isodens;

TEST_CASE("cone field calibrates the hyperbola graph") {
    const CalibrationCase c = calibration_case("cone");
    const CalibrationResiduals r = calibration_residuals(c, 0.02);
    CHECK(r.max_norm_excess < 1e-12);
    CHECK(r.max_div < 1e-12);
    CHECK(r.max_normal_mismatch < 1e-10);
}

TEST_CASE("constant density half plane has zero residuals") {
    const CalibrationCase c = calibration_case("halfplane");
    const CalibrationResiduals r = calibration_residuals(c, 0.05);
    CHECK(r.max_norm_excess == 0.0);
    CHECK(r.max_div == 0.0);
    CHECK(r.max_normal_mismatch == 0.0);
}

TEST_CASE("scaled field fails the unit bound") {
    CalibrationCase c = calibration_case("cone");
    auto g = c.g;
    c.g = [g](double x, double y) {
        const Vec2 v = g(x, y);
        return Vec2{1.1 * v.x, 1.1 * v.y};
    };
    const CalibrationResiduals r = calibration_residuals(c, 0.05);
    CHECK(r.max_norm_excess == doctest::Approx(0.1).epsilon(1e-10));
}

TEST_CASE("window must avoid density zeros") {
    CalibrationCase c = calibration_case("cone");
    c.y0 = -1.0;  // pulls the grid across the apex
    CHECK_THROWS_AS(calibration_residuals(c, 0.5), SingularPointInWindow);
}

TEST_CASE("affine graphs solve the constant-density equation exactly") {
    std::vector<double> phi;
    for (int i = 0; i < 50; ++i) phi.push_back(0.3 + 0.7 * (0.1 * i));
    CHECK(mse_residual(phi, 0.0, 0.1, [](double) { return 1.0; }) < 1e-13);
}

TEST_CASE("minimal surface residual shrinks at second order") {
    const OrderStudy exp_x = mse_order_study("exp-x", 0.005);
    CHECK(exp_x.order > 1.7);
    CHECK(exp_x.order < 2.3);
    CHECK_FALSE(exp_x.below_floor);

    const OrderStudy cone = mse_order_study("cone", 0.005);
    CHECK(cone.order > 1.7);
    CHECK(cone.order < 2.3);
}

TEST_CASE("divergence order study flags exactly-differenced fields") {
    const OrderStudy div = div_order_study(calibration_case("cone"), 0.02);
    // f g = (-x, y) is linear, so centered differences are exact and the
    // residual sits at rounding level on both grids
    CHECK(div.below_floor);
    CHECK(div.order == 2.0);
}

TEST_CASE("insufficient samples are rejected") {
    CHECK_THROWS_AS(mse_residual({1.0, 2.0, 3.0}, 0.0, 0.1,
                                 [](double) { return 1.0; }),
                    InsufficientPoints);
}
