#include <doctest.h>

#include <cmath>

#include "isodens/density.hpp"
#include "isodens/errors.hpp"
#include "isodens/gaussmod.hpp"

using namespace isodens;

TEST_CASE("evaluation takes the lower one-sided value on the interface") {
    const Density strip = Density::strip(2.0);
    CHECK(evaluate(strip, {0.3, 0.5}) == 1.0);
    CHECK(evaluate(strip, {0.3, 1.0}) == 1.0);
    CHECK(evaluate(strip, {0.3, 1.5}) == 2.0);

    for (double lam : {0.5, 2.0}) {
        const Density ball = Density::ball(lam);
        CHECK(evaluate(ball, {0.5, 0.0}) == lam);
        CHECK(evaluate(ball, {2.0, 0.0}) == 1.0);
        CHECK(evaluate(ball, {1.0, 0.0}) == std::min(1.0, lam));
    }

    const Density line = Density::line(3.0);
    CHECK(evaluate(line, {1.0, 0.0}) == 1.0);
    CHECK(evaluate(line, {1.0, 0.2}) == 3.0);

    const Density half = Density::half_space(2.0);
    CHECK(evaluate(half, {0.0, -1.0}) == 1.0);
    CHECK(evaluate(half, {0.0, 0.0}) == 1.0);
    CHECK(evaluate(half, {0.0, 1.0}) == 2.0);
}

TEST_CASE("side limits are sorted and guarded") {
    const Density ball = Density::ball(2.0);
    const auto [lo, hi] = side_limits(ball, {1.0, 0.0}, {1.0, 0.0});
    CHECK(lo == 1.0);
    CHECK(hi == 2.0);
    CHECK_THROWS_AS(side_limits(ball, {0.5, 0.0}, {1.0, 0.0}), PointNotOnInterface);
    CHECK_THROWS_AS(side_limits(ball, {1.0, 0.0}, {0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(side_limits(Density::gauss_mod(), {0.0, 0.0}, {1.0, 0.0}),
                    DomainError);
}

TEST_CASE("lambda validation") {
    CHECK_THROWS_AS(Density::strip(0.5), DomainError);
    CHECK_THROWS_AS(Density::ball(1.0), DomainError);
    CHECK_NOTHROW(Density::ball(0.5));
    CHECK_THROWS_AS(Density::line(1.0), DomainError);
}

TEST_CASE("total mass of the modified Gauss density") {
    const auto mass = total_mass(Density::gauss_mod());
    REQUIRE(mass.has_value());
    // both half planes cut by the x-axis carry the same weight
    CHECK(*mass ==
          doctest::Approx(2.0 * gaussmod::horizontal_profile(0.0).area).epsilon(1e-10));
    CHECK_FALSE(total_mass(Density::strip(2.0)).has_value());
}

TEST_CASE("json round trip") {
    for (const Density& d : {Density::strip(2.0), Density::ball(0.5),
                             Density::gauss_mod(), Density::constant()}) {
        const Density back = Density::from_json(d.to_json());
        CHECK(back.kind == d.kind);
        CHECK(back.lambda == d.lambda);
    }
}

TEST_CASE("log density gradients") {
    const Vec2 g = log_density_gradient(Density::gauss_mod(), {0.5, 0.5});
    CHECK(g.x == doctest::Approx(-1.0));
    CHECK(g.y == doctest::Approx(-0.5));
    const Vec2 c = log_density_gradient(Density::cone(), {3.0, 4.0});
    CHECK(c.x == doctest::Approx(3.0 / 25.0));
    CHECK(c.y == doctest::Approx(4.0 / 25.0));
    CHECK_THROWS_AS(log_density_gradient(Density::strip(2.0), {0.0, 0.0}), DomainError);
}
