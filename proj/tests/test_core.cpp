#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "diskpoly/core.hpp"
#include "diskpoly/lens.hpp"
#include "diskpoly/rng.hpp"
#include "support/oracles.hpp"

using namespace diskpoly;

TEST_CASE("minimum enclosing circle anchors") {
    const Circle single = min_enclosing_circle(std::vector<Vec2>{{0, 0}});
    CHECK(single.center.x == 0.0);
    CHECK(single.radius == 0.0);

    const Circle pair = min_enclosing_circle(std::vector<Vec2>{{0, 0}, {2, 0}});
    CHECK_THAT(pair.center.x, Catch::Matchers::WithinAbs(1.0, 1e-14));
    CHECK_THAT(pair.center.y, Catch::Matchers::WithinAbs(0.0, 1e-14));
    CHECK_THAT(pair.radius, Catch::Matchers::WithinAbs(1.0, 1e-14));

    // The apex (1,1) lies inside the diameter circle of the base pair.
    const Circle tri = min_enclosing_circle(std::vector<Vec2>{{0, 0}, {2, 0}, {1, 1}});
    CHECK_THAT(tri.center.x, Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK_THAT(tri.center.y, Catch::Matchers::WithinAbs(0.0, 1e-12));
    CHECK_THAT(tri.radius, Catch::Matchers::WithinAbs(1.0, 1e-12));
    const Circle ref = oracles::mec_exhaustive({{0, 0}, {2, 0}, {1, 1}});
    CHECK_THAT(tri.radius, Catch::Matchers::WithinAbs(ref.radius, 1e-12));
}

TEST_CASE("minimum enclosing circle errors") {
    CHECK_THROWS_MATCHES(min_enclosing_circle(std::vector<Vec2>{}), geom_error,
                         Catch::Matchers::Predicate<geom_error>(
                             [](const geom_error& e) { return e.code() == errc::empty_point_set; }));
}

TEST_CASE("minimum enclosing circle against exhaustive reference") {
    Xoshiro256pp rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(12));
        std::vector<Vec2> pts;
        for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        const Circle got = min_enclosing_circle(pts);
        const Circle ref = oracles::mec_exhaustive(pts);
        CHECK_THAT(got.radius, Catch::Matchers::WithinAbs(ref.radius, 1e-11));
        for (const Vec2& p : pts) CHECK(got.contains(p, 1e-10));
    }
}

TEST_CASE("minimum enclosing circle invariances") {
    Xoshiro256pp rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(20));
        std::vector<Vec2> pts;
        for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3)});
        const Circle base = min_enclosing_circle(pts);

        std::vector<Vec2> shuffled = pts;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        const Circle perm = min_enclosing_circle(shuffled);
        CHECK_THAT(perm.radius, Catch::Matchers::WithinAbs(base.radius, 1e-12));
        CHECK_THAT(dist(perm.center, base.center), Catch::Matchers::WithinAbs(0.0, 1e-11));

        const double ang = rng.uniform(0, two_pi);
        const Vec2 shift{rng.uniform(-5, 5), rng.uniform(-5, 5)};
        std::vector<Vec2> moved = pts;
        for (Vec2& p : moved) p = rotate(p, ang) + shift;
        const Circle rigid = min_enclosing_circle(moved);
        CHECK_THAT(rigid.radius, Catch::Matchers::WithinAbs(base.radius, 1e-12));
    }
}

TEST_CASE("monotone root finding") {
    const auto linear = [](double t) { return t - 0.5; };
    CHECK_THAT(solve_monotone_root(linear, 0.0, 1.0, 1e-12),
               Catch::Matchers::WithinAbs(0.5, 1e-12));

    // Balance point of a unit disk: pi (1-t)^2 = pi t^2.
    const auto disk = [](double t) { return pi * (1 - t) * (1 - t) - pi * t * t; };
    CHECK_THAT(solve_monotone_root(disk, 0.0, 1.0, 1e-12),
               Catch::Matchers::WithinAbs(0.5, 1e-12));

    const auto cosfix = [](double t) { return std::cos(t) - t; };
    CHECK_THAT(solve_monotone_root(cosfix, 0.0, 1.0, 1e-12),
               Catch::Matchers::WithinAbs(oracles::dottie_number(), 1e-11));

    const auto same_sign = [](double t) { return 1.0 + t * t; };
    CHECK_THROWS_MATCHES(solve_monotone_root(same_sign, 0.0, 1.0, 1e-12), geom_error,
                         Catch::Matchers::Predicate<geom_error>(
                             [](const geom_error& e) { return e.code() == errc::no_bracket; }));
}

TEST_CASE("monotone root finding is deterministic") {
    const auto f = [](double t) { return std::cos(3.0 * t) - t * t; };
    const double a = solve_monotone_root(f, 0.0, 1.0, 1e-12);
    const double b = solve_monotone_root(f, 0.0, 1.0, 1e-12);
    CHECK(a == b);
}

TEST_CASE("two-disk intersection area") {
    CHECK_THAT(two_disk_intersection_area(1.0, 0.0), Catch::Matchers::WithinAbs(pi, 1e-15));
    CHECK(two_disk_intersection_area(1.0, 2.0) == 0.0);
    CHECK(two_disk_intersection_area(1.0, 2.5) == 0.0);
    CHECK_THAT(two_disk_intersection_area(1.0, 1.0),
               Catch::Matchers::WithinAbs(2.0 * pi / 3.0 - std::sqrt(3.0) / 2.0, 1e-14));

    CHECK_THROWS_MATCHES(two_disk_intersection_area(-1.0, 0.5), geom_error,
                         Catch::Matchers::Predicate<geom_error>([](const geom_error& e) {
                             return e.code() == errc::invalid_geometry;
                         }));
    CHECK_THROWS_MATCHES(two_disk_intersection_area(1.0, -0.5), geom_error,
                         Catch::Matchers::Predicate<geom_error>([](const geom_error& e) {
                             return e.code() == errc::invalid_geometry;
                         }));
}

TEST_CASE("two-disk area decreases in the distance and matches the lens form") {
    double prev = two_disk_intersection_area(1.0, 0.0);
    for (int i = 1; i <= 200; ++i) {
        const double d = 2.0 * i / 200.0;
        const double a = two_disk_intersection_area(1.0, d);
        CHECK(a < prev);
        prev = a;
        // Same value through the lens area function of the boundary length.
        const double x = 4.0 * std::acos(0.5 * d);
        CHECK_THAT(a, Catch::Matchers::WithinAbs(lens_area(x), 1e-12));
    }
}

TEST_CASE("scaled radius two-disk area") {
    // rho-scaling: area scales with rho^2 at matched d/rho.
    Xoshiro256pp rng(5);
    for (int i = 0; i < 50; ++i) {
        const double rho = rng.uniform(0.1, 3.0);
        const double frac = rng.uniform(0.0, 2.0);
        const double base = two_disk_intersection_area(1.0, frac);
        CHECK_THAT(two_disk_intersection_area(rho, frac * rho),
                   Catch::Matchers::WithinRel(base * rho * rho, 1e-12));
    }
}
