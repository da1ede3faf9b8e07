#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oval/oracle.hpp"

using namespace oval;

TEST_CASE("square interval brackets the known invariant") {
    OracleResult r = delta_bruteforce(testutil::unit_square(), 1e4);
    double exact = std::sqrt(5.0) / 2.0;
    CHECK(r.lower <= exact);
    CHECK(r.upper >= exact);
    CHECK(r.upper - r.lower <= 5e-5);
    CHECK(r.max_gap <= 1e-4);
}

TEST_CASE("equilateral interval brackets sqrt(3)") {
    OracleResult r = delta_bruteforce(testutil::equilateral(), 1e4);
    CHECK(r.lower <= std::sqrt(3.0));
    CHECK(r.upper >= std::sqrt(3.0));
}

TEST_CASE("interval is well formed and sample budget is enforced") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        ConvexPolygon P = testutil::random_convex_polygon(rng, 3 + trial % 9);
        OracleResult r = delta_bruteforce(P, 500.0 / P.perimeter);
        CHECK(r.lower <= r.upper);
        CHECK(r.upper - r.lower <= r.max_gap / 2.0 + 1e-15);
    }
    CHECK_THROWS_AS(delta_bruteforce(testutil::unit_square(), 1e9, 1000), ValidationError);
    CHECK_THROWS_AS(delta_bruteforce(testutil::unit_square(), 0.0), ValidationError);
}

TEST_CASE("halving the spacing at least halves the width") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        ConvexPolygon P = testutil::random_convex_polygon(rng, 4 + trial);
        double spu = 300.0 / P.perimeter;
        double w1 = [&] {
            OracleResult r = delta_bruteforce(P, spu);
            return r.upper - r.lower;
        }();
        double w2 = [&] {
            OracleResult r = delta_bruteforce(P, 2.0 * spu);
            return r.upper - r.lower;
        }();
        CHECK(w2 <= w1 / 2.0 + 1e-15);
    }
}

TEST_CASE("mu profile") {
    ConvexPolygon sq = testutil::unit_square();
    auto profile = mu_profile(sq, 8);
    REQUIRE(profile.size() == 8);
    for (int i = 0; i < 8; ++i) {
        CHECK(profile[static_cast<size_t>(i)].first == doctest::Approx(0.5 * i));
        double expect = (i % 2 == 0) ? std::sqrt(2.0) : std::sqrt(1.25);
        CHECK(profile[static_cast<size_t>(i)].second == doctest::Approx(expect));
    }
    CHECK_THROWS_AS(mu_profile(sq, 3), ValidationError);

    // profile minimum is the same computation as the oracle upper bound
    OracleResult r = delta_bruteforce(sq, 2.0);
    double pmin = std::numeric_limits<double>::infinity();
    for (auto& [s, m] : profile) pmin = std::min(pmin, m);
    CHECK(pmin == doctest::Approx(std::sqrt(1.25)));
    CHECK(r.upper <= pmin + 1e-12);
}

TEST_CASE("profile is 1-Lipschitz between consecutive samples") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        ConvexPolygon P = testutil::random_convex_polygon(rng, 3 + trial);
        auto profile = mu_profile(P, 512);
        for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
            Point a = point_at_arclength(P, profile[i].first).point;
            Point b = point_at_arclength(P, profile[i + 1].first).point;
            CHECK(std::abs(profile[i + 1].second - profile[i].second) <=
                  dist(a, b) + 1e-12 * P.diam);
        }
    }
}

TEST_CASE("nearby polygons have nearby invariants") {
    // surjective correspondences moving every point at most eps change the
    // invariant by at most 2 eps; vertex perturbation realizes that setup
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        ConvexPolygon P = testutil::random_convex_polygon(rng, 6);
        double eps = 1e-3 * P.diam;
        std::vector<Point> moved;
        for (const Point& v : P.vertices)
            moved.push_back({v.x + eps * unit(rng) / 2.0, v.y + eps * unit(rng) / 2.0});
        ConvexPolygon Q;
        try {
            Q = validate_polygon(moved);
        } catch (const ValidationError&) {
            continue;
        }
        double spu = 2000.0 / P.perimeter;
        OracleResult rp = delta_bruteforce(P, spu);
        OracleResult rq = delta_bruteforce(Q, spu);
        double width = (rp.upper - rp.lower) + (rq.upper - rq.lower);
        CHECK(std::abs(rp.upper - rq.upper) <= 2.0 * eps + width + 1e-12);
    }
}
