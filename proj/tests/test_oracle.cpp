#include <doctest.h>

#include <cmath>

#include "isodens/errors.hpp"
#include "isodens/oracle.hpp"

using namespace isodens;

namespace {

Polygon regular_gon(Vec2 center, double radius, int n) {
    Polygon p;
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * M_PI * i / n;
        p.vertices.push_back(center + Vec2{std::cos(t), std::sin(t)} * radius);
    }
    return p;
}

Polygon rectangle(double x0, double y0, double x1, double y1) {
    Polygon p;
    p.vertices = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    return p;
}

}  // namespace

TEST_CASE("constant density reduces to Euclidean measures") {
    const Polygon circle = regular_gon({0, 0}, 1.0, 10000);
    CHECK(weighted_perimeter(circle, Density::constant()) ==
          doctest::Approx(2.0 * M_PI).epsilon(1e-6));
    CHECK(weighted_area(circle, Density::constant()) ==
          doctest::Approx(M_PI).epsilon(1e-6));
}

TEST_CASE("strip density splits at the walls") {
    const Density strip2 = Density::strip(2.0);
    const Polygon square = rectangle(-1.0, -1.0, 1.0, 1.0);
    // top and bottom edges lie on the interface and take the value 1
    CHECK(weighted_perimeter(square, strip2) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(weighted_area(square, strip2) == doctest::Approx(4.0).epsilon(1e-12));

    const Density strip3 = Density::strip(3.0);
    const Polygon tall = rectangle(0.0, 0.0, 2.0, 2.0);
    // 2x1 below the wall at weight 1 plus 2x1 above at weight 3
    CHECK(weighted_area(tall, strip3) == doctest::Approx(8.0).epsilon(1e-12));
    // left/right edges split exactly at y = 1: 2(1 + 3) + bottom 2 + top 3*2
    CHECK(weighted_perimeter(tall, strip3) == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("splitting is exact regardless of resolution") {
    const Density strip3 = Density::strip(3.0);
    auto sides = [&](int n) {
        Polygon p;
        for (int i = 0; i < n; ++i)
            p.vertices.push_back({0.0 + 2.0 * i / n, 0.0});
        for (int i = 0; i < n; ++i)
            p.vertices.push_back({2.0, 2.0 * i / n});
        for (int i = 0; i < n; ++i)
            p.vertices.push_back({2.0 - 2.0 * i / n, 2.0});
        for (int i = 0; i < n; ++i)
            p.vertices.push_back({0.0, 2.0 - 2.0 * i / n});
        return p;
    };
    const double a5 = weighted_area(sides(5), strip3);
    const double a40 = weighted_area(sides(40), strip3);
    CHECK(a5 == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(a40 == doctest::Approx(a5).epsilon(1e-13));
    CHECK(weighted_perimeter(sides(5), strip3) ==
          doctest::Approx(weighted_perimeter(sides(40), strip3)).epsilon(1e-12));
}

TEST_CASE("ball density weights the inside of the unit circle") {
    const Density ball2 = Density::ball(2.0);
    const Polygon circle = regular_gon({0, 0}, 1.0, 10000);
    // boundary on the interface takes min(1, lambda) = 1
    CHECK(weighted_perimeter(circle, ball2) == doctest::Approx(2.0 * M_PI).epsilon(1e-6));
    CHECK(weighted_area(circle, ball2) == doctest::Approx(2.0 * M_PI).epsilon(1e-5));

    const Polygon big = regular_gon({0, 0}, 2.0, 10000);
    CHECK(weighted_area(big, ball2) == doctest::Approx(5.0 * M_PI).epsilon(1e-5));

    const Density ball_half = Density::ball(0.5);
    CHECK(weighted_perimeter(circle, ball_half) ==
          doctest::Approx(0.5 * 2.0 * M_PI).epsilon(1e-6));
}

TEST_CASE("orientation invariance") {
    Polygon circle = regular_gon({0.3, 0.2}, 0.9, 300);
    const Density d = Density::ball(2.0);
    const double p = weighted_perimeter(circle, d);
    const double a = circle.signed_area();
    circle.reverse();
    CHECK(weighted_perimeter(circle, d) == doctest::Approx(p).epsilon(1e-13));
    CHECK(circle.signed_area() == doctest::Approx(-a).epsilon(1e-13));
}

TEST_CASE("candidate sampling certifies closed forms") {
    struct Row {
        CandidateSpec spec;
        double tol;
    };
    const Row rows[] = {
        {{"strip:i", 2.0, 2.0, 0.0}, 1e-6},
        {{"strip:ii", 2.0, 7.0, 0.0}, 1e-6},
        {{"strip:iii", 2.0, 0.5, 0.0}, 1e-6},
        {{"strip:iv", 2.0, 0.5, 0.0}, 1e-6},
        {{"ball:a", 2.0, 3.0, 0.0}, 1e-6},
        {{"ball:big", 2.0, 16.0, 0.0}, 1e-6},
        {{"ball:b", 2.0, 0.3, 0.0}, 1e-6},
        {{"ball:B", 0.5, 1.0, 0.0}, 1e-6},
        {{"ball:C", 0.5, 0.7853981633974483, 0.0}, 1e-6},
        {{"line", 2.0, 0.0, 1.0}, 1e-6},
        {{"gauss:h", 1.0, 0.5, 0.0}, 1e-10},
        {{"gauss:v", 1.0, 0.5, 0.0}, 1e-10},
    };
    for (const Row& row : rows) {
        CAPTURE(row.spec.family);
        const CandidateGeometry g = sample_candidate(row.spec, 20000);
        const double a = weighted_area(g.polygon, g.density);
        const double p = weighted_perimeter(g.polygon, g.density);
        CHECK(a == doctest::Approx(g.closed_form.area).epsilon(row.tol));
        CHECK(p == doctest::Approx(g.closed_form.perimeter).epsilon(row.tol));
        for (const CornerSample& corner : g.corners)
            CHECK(std::abs(snell_residual(corner)) < 1e-9);
    }
    CHECK_THROWS_AS(sample_candidate({"nope", 2.0, 1.0, 0.0}, 1000), InvalidSpec);
    CHECK_THROWS_AS(sample_candidate({"disk", 1.0, 1.0, 0.0}, 8), InvalidSpec);
}

TEST_CASE("perturbation probe accepts minimizers and rejects a broken corner") {
    const CandidateGeometry disk = sample_candidate({"disk", 1.0, 1.0, 0.0}, 1024);
    const ProbeReport ok =
        perturbation_probe(disk.polygon, disk.density, 1e-3, 100);
    CHECK(ok.area_restore_failures == 0);
    CHECK(ok.min_perimeter_change > -1e-5);

    // an ellipse is not stationary under constant density: some perturbation
    // shortens the boundary at first order
    Polygon ellipse;
    for (int i = 0; i < 1024; ++i) {
        const double t = 2.0 * M_PI * i / 1024;
        ellipse.vertices.push_back({1.3 * std::cos(t), 0.8 * std::sin(t)});
    }
    const ProbeReport bad =
        perturbation_probe(ellipse, Density::constant(), 1e-3, 100);
    CHECK(bad.min_perimeter_change < -1e-6);
}

TEST_CASE("probe is deterministic in the seed") {
    const CandidateGeometry disk = sample_candidate({"disk", 1.0, 1.0, 0.0}, 256);
    const ProbeReport a = perturbation_probe(disk.polygon, disk.density, 1e-3, 20, 7);
    const ProbeReport b = perturbation_probe(disk.polygon, disk.density, 1e-3, 20, 7);
    CHECK(a.min_perimeter_change == b.min_perimeter_change);
}
