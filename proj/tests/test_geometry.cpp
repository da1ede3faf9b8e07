#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "helpers.hpp"
#include "oval/geometry.hpp"

using namespace oval;
using testutil::random_convex_polygon;

TEST_CASE("closest point on segment") {
    Segment seg{{-1, 0}, {1, 0}};
    auto foot = closest_point_on_segment({0, 1}, seg);
    CHECK(foot.t == doctest::Approx(0.5));
    CHECK(foot.point.x == doctest::Approx(0.0));
    CHECK(foot.point.y == doctest::Approx(0.0));

    foot = closest_point_on_segment({2, 1}, seg);
    CHECK(foot.t == doctest::Approx(1.5)); // raw parameter, clamp only moves the point
    CHECK(foot.point.x == doctest::Approx(1.0));
    CHECK(foot.point.y == doctest::Approx(0.0));

    foot = closest_point_on_segment({0.3, 0.4}, {{0, 0}, {1, 0}});
    CHECK(foot.point.x == doctest::Approx(0.3));
    CHECK(foot.point.y == doctest::Approx(0.0));
}

TEST_CASE("distance to segment") {
    CHECK(distance_to_segment({0, 2}, {{-1, 0}, {1, 0}}) == doctest::Approx(2.0));
    CHECK(distance_to_segment({3, 4}, {{0, 0}, {1, 0}}) ==
          doctest::Approx(std::sqrt(20.0)));
    CHECK(distance_to_segment({0, 0}, {{0, 0}, {1, 0}}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(distance_to_segment({0, 0}, {{1, 1}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(closest_point_on_segment({0, 0}, {{1, 1}, {1, 1}}), ValidationError);
}

TEST_CASE("distance agrees with the nearest point on random data") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        Segment seg{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
        if (dist(seg.a, seg.b) < 1e-6) continue;
        Point z{coord(rng), coord(rng)};
        double d = distance_to_segment(z, seg);
        double via_foot = dist(z, closest_point_on_segment(z, seg).point);
        CHECK(d == doctest::Approx(via_foot).epsilon(1e-12));
    }
}

TEST_CASE("polygon validation") {
    ConvexPolygon sq = testutil::unit_square();
    CHECK(sq.perimeter == doctest::Approx(4.0));
    CHECK(sq.cum_arclength[2] == doctest::Approx(2.0));
    CHECK(sq.diam == doctest::Approx(std::sqrt(2.0)));

    // clockwise input is normalized
    ConvexPolygon cw = validate_polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(cw.perimeter == doctest::Approx(4.0));
    double area2 = 0.0;
    for (int i = 0; i < cw.size(); ++i)
        area2 += cross(cw.vertex(i), cw.vertex(i + 1));
    CHECK(area2 > 0.0);

    CHECK_THROWS_WITH_AS(validate_polygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}),
                         doctest::Contains("collinear"), ValidationError);
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {1, 0}, {1e-12, 1e-12}}), ValidationError);
    // reflex quadrilateral
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {2, 0}, {0.2, 0.2}, {0, 2}}), ValidationError);
    double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {1, 0}, {nan, 1}}), ValidationError);
}

TEST_CASE("arclength addressing") {
    ConvexPolygon sq = testutil::unit_square();
    BoundaryPoint bp = point_at_arclength(sq, 0.0);
    CHECK(bp.edge == 0);
    CHECK(bp.t == 0.0);
    CHECK(bp.point.x == doctest::Approx(0.0));

    bp = point_at_arclength(sq, 2.5);
    CHECK(bp.edge == 2);
    CHECK(bp.t == doctest::Approx(0.5));
    CHECK(bp.point.x == doctest::Approx(0.5));
    CHECK(bp.point.y == doctest::Approx(1.0));

    // the perimeter wraps to the first vertex
    bp = point_at_arclength(sq, 4.0);
    CHECK(bp.edge == 0);
    CHECK(bp.t == 0.0);
    CHECK(bp.s == 0.0);
}

TEST_CASE("arclength roundtrip is the identity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        ConvexPolygon P = random_convex_polygon(rng, 3 + static_cast<int>(unit(rng) * 9));
        for (int i = 0; i < 50; ++i) {
            double s = unit(rng) * P.perimeter;
            BoundaryPoint bp = point_at_arclength(P, s);
            CHECK(std::abs(arclength_of(P, bp) - s) <= 1e-12 * P.perimeter);
        }
    }
}

TEST_CASE("farthest vertices") {
    ConvexPolygon sq = testutil::unit_square();
    FarthestResult fr = farthest_vertices(sq, {0.5, 0.0});
    CHECK(fr.indices == std::vector<int>{2, 3});
    CHECK(fr.mu == doctest::Approx(std::sqrt(1.25)));

    ConvexPolygon tri = testutil::normalized_triangle(0.3, 0.8);
    fr = farthest_vertices(tri, {0.0, 0.0});
    CHECK(fr.indices == std::vector<int>{0, 1});
    CHECK(fr.mu == doctest::Approx(1.0));

    ConvexPolygon eq = testutil::equilateral();
    fr = farthest_vertices(eq, eq.vertex(0));
    CHECK(fr.indices == std::vector<int>{1, 2});
    CHECK(fr.mu == doctest::Approx(2.0));
}

TEST_CASE("farthest vertex matches a dense boundary scan") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        ConvexPolygon P = random_convex_polygon(rng, 3 + trial);
        const int m = 4000;
        double h = P.perimeter / m;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int k = 0; k < 10; ++k) {
            Point x = point_at_arclength(P, unit(rng) * P.perimeter).point;
            double exact = mu(P, x);
            double sampled = 0.0;
            for (int i = 0; i < m; ++i)
                sampled = std::max(sampled, dist(x, point_at_arclength(P, h * i).point));
            CHECK(sampled <= exact + 1e-12 * P.diam);
            CHECK(sampled >= exact - h / 2.0);
        }
    }
}

TEST_CASE("mu is 1-Lipschitz and dominated below by half the diameter") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coord(-8.0, 8.0);
    for (int trial = 0; trial < 10; ++trial) {
        ConvexPolygon P = random_convex_polygon(rng, 3 + trial);
        double half_diam = diameter(P).length / 2.0;
        for (int i = 0; i < 200; ++i) {
            Point a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
            CHECK(std::abs(mu(P, a) - mu(P, b)) <= dist(a, b) + 1e-12);
            CHECK(mu(P, a) >= half_diam - 1e-12);
        }
    }
}

TEST_CASE("diameter") {
    DiameterResult d = diameter(testutil::unit_square());
    CHECK(d.length == doctest::Approx(std::sqrt(2.0)));
    CHECK(d.i == 0);
    CHECK(d.j == 2);
    CHECK(d.ties.size() == 2); // both diagonals

    d = diameter(testutil::equilateral());
    CHECK(d.length == doctest::Approx(2.0));
    CHECK(d.ties.size() == 3);
}

TEST_CASE("distances are motion invariant and scale equivariant") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ConvexPolygon P = random_convex_polygon(rng, 7);
    double d0 = diameter(P).length;
    double m0 = mu(P, P.vertex(0));
    for (int i = 0; i < 20; ++i) {
        double ang = unit(rng) * 6.28, tx = 4 * (unit(rng) - 0.5), ty = 4 * (unit(rng) - 0.5);
        ConvexPolygon Q = testutil::transformed(P, ang, tx, ty);
        CHECK(std::abs(diameter(Q).length - d0) <= 1e-9);
        CHECK(std::abs(mu(Q, Q.vertex(0)) - m0) <= 1e-9);
    }
    for (double scale : {1e-6, 1e-3, 10.0, 1e6}) {
        ConvexPolygon Q = testutil::transformed(P, 0.0, 0.0, 0.0, scale);
        CHECK(diameter(Q).length == doctest::Approx(scale * d0).epsilon(1e-12));
    }
}
