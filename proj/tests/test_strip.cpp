#include <doctest.h>

#include <cmath>

#include "isodens/errors.hpp"
#include "isodens/strip.hpp"

using namespace isodens;

TEST_CASE("families i and ii agree at the half-disk-pair volume") {
    CHECK(strip::profile_i(M_PI) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK(strip::profile_ii(M_PI) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK(strip::profile_i(0.25 * M_PI) == doctest::Approx(M_PI).epsilon(1e-15));
}

TEST_CASE("families iii and iv have generalized curvature h: dP/dA = h") {
    for (double lam : {1.5, 2.0, 8.0}) {
        for (double h : {0.3, 0.5, 0.9}) {
            const double d = 1e-5;
            {
                const ProfilePoint lo = strip::profile_iii(h - d, lam);
                const ProfilePoint hi = strip::profile_iii(h + d, lam);
                CHECK((hi.perimeter - lo.perimeter) / (hi.area - lo.area) ==
                      doctest::Approx(h).epsilon(1e-6));
            }
            {
                const ProfilePoint lo = strip::profile_iv(h - d, lam);
                const ProfilePoint hi = strip::profile_iv(h + d, lam);
                CHECK((hi.perimeter - lo.perimeter) / (hi.area - lo.area) ==
                      doctest::Approx(h).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("families iii and iv never reach areas at or below pi") {
    for (double lam : {1.1, 2.0, 8.0}) {
        for (int i = 1; i <= 200; ++i) {
            const double h = static_cast<double>(i) / 200.0;
            CHECK(strip::profile_iii(h, lam).area > M_PI);
            CHECK(strip::profile_iv(h, lam).area > M_PI);
        }
    }
}

TEST_CASE("area inversion recovers h") {
    const double lam = 2.0;
    const double v = strip::profile_iii(0.5, lam).area;
    const auto roots = strip::invert_area(strip::Family::III, lam, v);
    REQUIRE(!roots.empty());
    bool found = false;
    for (const auto& r : roots) found = found || std::abs(r.h - 0.5) < 1e-9;
    CHECK(found);
    CHECK(strip::invert_area(strip::Family::III, lam, 1.0).empty());
}

TEST_CASE("crossover and family switching") {
    const CrossoverReport r = strip::crossover_v0(2.0);
    CHECK(r.value == doctest::Approx(11.702229742289529).epsilon(1e-9));
    CHECK(strip::best_profile(2.0, 2.0).family == strip::Family::I);
    CHECK(strip::best_profile(0.5 * (M_PI + r.value), 2.0).family ==
          strip::Family::II);
    CHECK(strip::best_profile(2.0 * r.value, 2.0).family == strip::Family::III);
    // at the crossover the two candidates tie
    const strip::BestProfile at = strip::best_profile(r.value, 2.0);
    CHECK(at.perimeter == doctest::Approx(strip::profile_ii(r.value)).epsilon(1e-8));
}

TEST_CASE("reversing regime near lambda = 1") {
    // area along family iii first decreases then increases as h drops from 1
    const double lam = 1.1;
    const double a0 = strip::profile_iii(1.0, lam).area;
    const double a1 = strip::profile_iii(0.9, lam).area;
    const double a2 = strip::profile_iii(0.8, lam).area;
    CHECK(a1 < a0);
    CHECK(a2 > a1);
}

TEST_CASE("arc gap") {
    CHECK(strip::arc_gap(1e-12) == doctest::Approx(1.0));
    const strip::ArcGapMin m = strip::arc_gap_min();
    CHECK(m.value > 0.25 * M_PI);
    CHECK(m.x_min > M_PI / 16.0);
    CHECK(m.x_min < M_PI / 8.0);
}

TEST_CASE("line density ratio stays below the half-plane bound") {
    for (double lam : {1.01, 2.0, 10.0, 100.0, 1e6})
        CHECK(line_density_ratio(lam) < 4.0 * M_PI * lam);
    // lambda -> 1: flat-angle half disk, ratio 4 pi^2 / pi = 4 pi
    CHECK(line_density_ratio(1.0 + 1e-10) == doctest::Approx(4.0 * M_PI).epsilon(1e-4));
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(strip::profile_i(-1.0), DomainError);
    CHECK_THROWS_AS(strip::profile_ii(1.0), DomainError);
    CHECK_THROWS_AS(strip::profile_iii(0.0, 2.0), DomainError);
    CHECK_THROWS_AS(strip::profile_iii(0.5, 0.9), DomainError);
}
