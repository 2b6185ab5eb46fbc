#include <doctest.h>

#include <cmath>

#include "isodens/ball.hpp"
#include "isodens/errors.hpp"
#include "isodens/special.hpp"

using namespace isodens;

TEST_CASE("external and covering balls") {
    CHECK(ball::profile_a(M_PI) == doctest::Approx(2.0 * M_PI));
    CHECK(ball::profile_a(4.0 * M_PI) == doctest::Approx(4.0 * M_PI));
    CHECK(ball::profile_big(2.0 * M_PI, 2.0) == doctest::Approx(2.0 * M_PI));
    CHECK(ball::profile_big(5.0 * M_PI, 2.0) == doctest::Approx(4.0 * M_PI));
    CHECK_THROWS_AS(ball::profile_big(M_PI, 2.0), DomainError);
}

TEST_CASE("lens against the printed convex-branch formulas") {
    const double lam = 2.0;
    const double beta0 = std::acos(1.0 / lam);
    for (double alpha : {0.2, 0.5, 1.0}) {
        const double beta = alpha + beta0;
        const double rho = std::sin(alpha) / std::sin(beta);
        const double p = 2.0 * (alpha + lam * rho * (M_PI - beta));
        const double a = lam * (circular_segment_area(alpha) +
                                rho * rho * circular_segment_area(M_PI - beta));
        const ball::LensProfile lp = ball::profile_b(alpha, lam);
        CHECK(lp.perimeter == doctest::Approx(p).epsilon(1e-12));
        CHECK(lp.area == doctest::Approx(a).epsilon(1e-12));
        CHECK(lp.shape_class == ball::ShapeB::Convex);
    }
}

TEST_CASE("lens shape classes span convex, chord and nonconvex") {
    const double lam = 2.0;
    const double beta0 = std::acos(1.0 / lam);
    CHECK(ball::profile_b(0.5, lam).shape_class == ball::ShapeB::Convex);
    CHECK(ball::profile_b(M_PI - beta0, lam).shape_class == ball::ShapeB::Chord);
    CHECK(ball::profile_b(M_PI - beta0 + 0.3, lam).shape_class ==
          ball::ShapeB::Nonconvex);
}

TEST_CASE("lens area map inverts and the full-ball limit is continuous") {
    const double lam = 2.0;
    const double v = ball::lens_area(0.7, lam);
    CHECK(ball::lens_alpha_for_area(v, lam) == doctest::Approx(0.7).epsilon(1e-10));
    // alpha -> pi recovers the covered unit ball: area lambda pi, perimeter 2 pi
    const ball::LensProfile full = ball::profile_b(M_PI - 1e-6, lam);
    CHECK(full.area == doctest::Approx(lam * M_PI).epsilon(1e-5));
    CHECK(full.perimeter == doctest::Approx(2.0 * M_PI).epsilon(1e-5));
}

TEST_CASE("psi stays above pi inside (0,1)") {
    std::vector<double> grid;
    for (int i = 1; i < 1000; ++i) grid.push_back(i / 1000.0);
    CHECK(ball::psi_check(grid) > 0.0);
    CHECK(ball::psi_check({1.0}) == doctest::Approx(0.0).epsilon(1e-14));
    // psi(0.5) = sqrt(0.75) + (pi - pi/3)/0.5
    CHECK(std::sqrt(0.75) + (M_PI - M_PI / 3.0) / 0.5 - M_PI ==
          doctest::Approx(ball::psi_check({0.5})).epsilon(1e-14));
}

TEST_CASE("crossover for lambda = 2 orders the candidates") {
    const double lam = 2.0;
    const CrossoverReport r = ball::crossover_gt1(lam);
    CHECK(r.value > 0.0);
    CHECK(r.value < lam * M_PI);
    auto lens_p = [&](double v) {
        return ball::profile_b(ball::lens_alpha_for_area(v, lam), lam).perimeter;
    };
    CHECK(ball::profile_a(0.5 * r.value) < lens_p(0.5 * r.value));
    CHECK(ball::profile_a(0.9 * lam * M_PI) > lens_p(0.9 * lam * M_PI));
}

TEST_CASE("interior ball ratio is exactly 4 lambda pi") {
    const double lam = 0.5;
    for (double v : {0.1, 0.5, lam * M_PI}) {
        const double p = ball::profile_A(v, lam);
        CHECK(p * p / v == doctest::Approx(4.0 * lam * M_PI).epsilon(1e-13));
    }
    CHECK_THROWS_AS(ball::profile_A(2.0 * M_PI, 0.5), DomainError);
}

TEST_CASE("family B endpoint and large-radius asymptotics") {
    const double lam = 0.5;
    const double beta_max = M_PI - std::acos(lam);
    const ProfilePoint end = ball::profile_B(beta_max, lam);
    CHECK(end.area == doctest::Approx(lam * M_PI).epsilon(1e-13));
    CHECK(end.perimeter == doctest::Approx(2.0 * lam * M_PI).epsilon(1e-13));

    // expanding P_B = 2((pi-beta) r + lambda alpha) at beta -> 0 gives
    // P_B(r) = 2 pi r + 2 lambda acos(lambda) - 2 sqrt(1-lambda^2) + O(1/r)
    const double beta = 1e-4;
    const double alpha = beta + std::acos(lam);
    const double r = std::sin(alpha) / std::sin(beta);
    const double asym = 2.0 * M_PI * r + 2.0 * lam * std::acos(lam) -
                        2.0 * std::sqrt(1.0 - lam * lam);
    CHECK(ball::profile_B(beta, lam).perimeter ==
          doctest::Approx(asym).epsilon(1e-6));
}

TEST_CASE("family C ratio bound and asymptotics") {
    const double lam = 0.5;
    for (int i = 1; i < 100; ++i) {
        const double bh = 0.5 * M_PI * i / 100.0;
        const ProfilePoint p = ball::profile_C(bh, lam);
        CHECK(p.perimeter * p.perimeter > 4.0 * lam * M_PI * p.area);
    }
    // P_C = 2 pi r + O(1) with the constant -2(1-lambda)
    const double bh = 1e-3;
    const double r = 1.0 / std::tan(bh);
    CHECK(ball::profile_C(bh, lam).perimeter ==
          doctest::Approx(2.0 * M_PI * r - 2.0 * (1.0 - lam)).epsilon(1e-5));
}

TEST_CASE("crossover below lambda pi does not exist, above it B and C swap") {
    const double lam = 0.5;
    const ball::CrossoverLt1 c = ball::crossover_lt1(lam);
    CHECK(c.v1.value > lam * M_PI);
    CHECK(c.v2.value >= c.v1.value);
    auto pB = [&](double v) {
        return ball::profile_B(ball::beta_for_area_B(v, lam), lam).perimeter;
    };
    auto pC = [&](double v) {
        return ball::profile_C(ball::beta_hat_for_area_C(v, lam), lam).perimeter;
    };
    const double just_above = lam * M_PI + 0.2;
    CHECK(pB(just_above) < pC(just_above));
    CHECK(pB(40.0) > pC(40.0));
}

TEST_CASE("f(lambda) positivity") {
    std::vector<double> grid;
    for (int i = 1; i < 1000; ++i) grid.push_back(i / 1000.0);
    CHECK(ball::f_lambda_check(grid) > 0.0);
    CHECK(std::acos(0.5) - std::sqrt(0.75) + 0.5 == doctest::Approx(0.68113).epsilon(1e-4));
}
