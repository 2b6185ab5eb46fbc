#include <doctest.h>

#include <cmath>

#include "isodens/errors.hpp"
#include "isodens/quadrature.hpp"
#include "isodens/special.hpp"

using namespace isodens;

TEST_CASE("incomplete gamma against quadrature") {
    // Gamma(1/4) = 4 int_0^inf exp(-u^4) du
    const double tail = integrate([](double u) { return std::exp(-u * u * u * u); },
                                  0.0, 6.0, 1e-14);
    CHECK(gamma_fn(0.25) == doctest::Approx(4.0 * tail).epsilon(1e-12));

    const double a = 0.25;
    for (double x : {0.05, 0.3, 1.0, 2.5}) {
        // substitution t = u^4 removes the t^{-3/4} singularity at 0
        const double lower =
            integrate([](double u) { return 4.0 * std::exp(-u * u * u * u); }, 0.0,
                      std::pow(x, 0.25), 1e-14);
        CHECK(lower_incomplete_gamma(a, x) == doctest::Approx(lower).epsilon(1e-9));
        CHECK(lower_incomplete_gamma(a, x) + upper_incomplete_gamma(a, x) ==
              doctest::Approx(gamma_fn(a)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(upper_incomplete_gamma(0.25, -1.0), DomainError);
    CHECK_THROWS_AS(upper_incomplete_gamma(-1.0, 1.0), DomainError);
}

TEST_CASE("incomplete gamma closed forms") {
    for (double x : {0.0, 1.0, 2.0})
        CHECK(upper_incomplete_gamma(1.0, x) ==
              doctest::Approx(std::exp(-x)).epsilon(1e-12));
    CHECK(upper_incomplete_gamma(0.25, 0.0) ==
          doctest::Approx(3.6256099082).epsilon(1e-10));
    CHECK(upper_incomplete_gamma(1.25, 0.0) ==
          doctest::Approx(0.25 * gamma_fn(0.25)).epsilon(1e-13));
    CHECK(isodens::erf(1.0) == doctest::Approx(0.8427007929).epsilon(1e-10));
}

TEST_CASE("erf against quadrature") {
    for (double x : {0.1, 0.5, 1.3, 3.0}) {
        const double ref =
            2.0 / std::sqrt(M_PI) *
            integrate([](double t) { return std::exp(-t * t); }, 0.0, x, 1e-14);
        CHECK(isodens::erf(x) == doctest::Approx(ref).epsilon(1e-13));
        CHECK(isodens::erf(-x) == doctest::Approx(-ref).epsilon(1e-13));
    }
}

TEST_CASE("arc length of unit-chord circular arcs") {
    CHECK(arc(0.0) == doctest::Approx(1.0));
    // area pi/8 is the half-disk on a unit chord: length pi/2
    CHECK(arc(M_PI / 8.0) == doctest::Approx(0.5 * M_PI).epsilon(1e-12));

    // finite-difference derivative
    for (double x : {0.05, M_PI / 8.0, 0.8, 1.4}) {
        const double fd = (arc(x + 1e-6) - arc(x - 1e-6)) / 2e-6;
        CHECK(arc_derivative(x) == doctest::Approx(fd).epsilon(1e-6));
    }

    CHECK(arc_derivative(M_PI / 8.0) == doctest::Approx(2.0).epsilon(1e-10));

    // inversion returns L(theta) at the matching parameter
    const ArcParametrization p{2.0 * M_PI / 3.0};
    CHECK(arc(p.area()) == doctest::Approx(p.length()).epsilon(1e-12));

    // convex below pi/8, concave above (second differences)
    auto second = [](double x) {
        const double d = 1e-4;
        return arc(x + d) - 2.0 * arc(x) + arc(x - d);
    };
    CHECK(second(0.1) > 0.0);
    CHECK(second(1.0) < 0.0);
}

TEST_CASE("circular segment area series matches closed form") {
    for (double g : {1e-4, 4.9e-3, 5.1e-3, 0.3, 1.5}) {
        const double exact = g - std::sin(g) * std::cos(g);
        CHECK(circular_segment_area(g) == doctest::Approx(exact).epsilon(1e-14));
    }
}

TEST_CASE("arc parametrization identities") {
    for (double theta : {0.3, 1.0, 2.0}) {
        ArcParametrization p{theta};
        CHECK(p.radius() == doctest::Approx(1.0 / (2.0 * std::sin(theta))));
        const double fd_area =
            (ArcParametrization{theta + 1e-6}.area() -
             ArcParametrization{theta - 1e-6}.area()) /
            2e-6;
        CHECK(p.area_derivative() == doctest::Approx(fd_area).epsilon(1e-6));
        const double fd_len =
            (ArcParametrization{theta + 1e-6}.length() -
             ArcParametrization{theta - 1e-6}.length()) /
            2e-6;
        CHECK(p.length_derivative() == doctest::Approx(fd_len).epsilon(1e-6));
    }
    CHECK(ArcParametrization{0.5 * M_PI}.area_derivative() == doctest::Approx(0.5));
}
