#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "diskpoly/common.hpp"
#include "diskpoly/rng.hpp"

namespace diskpoly {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
    friend Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

using Point = Vec2;

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 unit_vec(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }
inline Vec2 rotate(Vec2 a, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

struct Circle {
    Vec2 center;
    double radius = 0.0;

    bool contains(Vec2 p, double tol) const { return dist(center, p) <= radius + tol; }
};

// Closed angular interval on the unit circle, encoded by midpoint and
// half-width. half_width == pi is the full circle; an empty set is an
// absent optional at the call sites that produce one.
struct AngleInterval {
    double mid = 0.0;
    double half_width = 0.0;  // in [0, pi]

    double lo() const { return mid - half_width; }
    double hi() const { return mid + half_width; }
    bool full() const { return half_width >= pi; }
};

// Intersection of two angular intervals. Inputs of half-width < pi each
// intersect in at most one interval; the three shift candidates cover the
// wrap-around placements of b relative to a.
inline std::optional<AngleInterval> intersect(const AngleInterval& a, const AngleInterval& b) {
    if (a.full()) return b;
    if (b.full()) return a;
    const double delta = wrap_signed(b.mid - a.mid);
    std::optional<AngleInterval> best;
    for (double shift : {delta - two_pi, delta, delta + two_pi}) {
        const double lo = std::max(-a.half_width, shift - b.half_width);
        const double hi = std::min(a.half_width, shift + b.half_width);
        if (hi < lo) continue;
        if (!best || (hi - lo) > 2.0 * best->half_width) {
            best = AngleInterval{a.mid + 0.5 * (lo + hi), 0.5 * (hi - lo)};
        }
    }
    return best;
}

namespace detail {

inline Circle circle_from_two(Vec2 a, Vec2 b) {
    return {0.5 * (a + b), 0.5 * dist(a, b)};
}

// Circumcircle; falls back to the widest pair diameter when the points are
// (nearly) collinear.
inline Circle circle_from_three(Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 ab = b - a, ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    const double scale = std::max({norm2(ab), norm2(ac), norm2(c - b)});
    if (std::abs(d) <= 1e-14 * scale) {
        Circle best = circle_from_two(a, b);
        for (const Circle& cand : {circle_from_two(a, c), circle_from_two(b, c)}) {
            if (cand.radius > best.radius) best = cand;
        }
        return best;
    }
    const double na = norm2(ab), nc = norm2(ac);
    const Vec2 rel{(ac.y * na - ab.y * nc) / d, (ab.x * nc - ac.x * na) / d};
    return {a + rel, norm(rel)};
}

inline Circle circle_from_boundary(std::span<const Vec2> bd) {
    switch (bd.size()) {
        case 0: return {{0.0, 0.0}, -1.0};
        case 1: return {bd[0], 0.0};
        case 2: return circle_from_two(bd[0], bd[1]);
        default: return circle_from_three(bd[0], bd[1], bd[2]);
    }
}

inline bool in_circle(const Circle& c, Vec2 p) {
    if (c.radius < 0.0) return false;
    const double tol = 1e-12 * (1.0 + c.radius);
    return dist(c.center, p) <= c.radius + tol;
}

inline Circle welzl(std::vector<Vec2>& pts, std::size_t n, std::vector<Vec2>& boundary) {
    if (n == 0 || boundary.size() == 3) return circle_from_boundary(boundary);
    Circle c = welzl(pts, n - 1, boundary);
    if (in_circle(c, pts[n - 1])) return c;
    boundary.push_back(pts[n - 1]);
    c = welzl(pts, n - 1, boundary);
    boundary.pop_back();
    return c;
}

}  // namespace detail

// Minimum enclosing circle, randomized incremental (Welzl). The shuffle
// uses a fixed seed so identical inputs give bit-identical results.
inline Circle min_enclosing_circle(std::span<const Vec2> points) {
    if (points.empty()) fail(errc::empty_point_set, "min_enclosing_circle needs at least one point");
    for (const Vec2& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            fail(errc::invalid_geometry, "non-finite coordinate");
    }

    // Dedupe within 1e-14 (absolute, inputs here are O(1) after
    // normalization); coincident points only destabilize the recursion.
    std::vector<Vec2> pts;
    pts.reserve(points.size());
    for (const Vec2& p : points) {
        bool dup = false;
        for (const Vec2& q : pts) {
            if (std::abs(p.x - q.x) <= 1e-14 && std::abs(p.y - q.y) <= 1e-14) {
                dup = true;
                break;
            }
        }
        if (!dup) pts.push_back(p);
    }

    Xoshiro256pp rng(0x9E3779B97F4A7C15ULL);
    for (std::size_t i = pts.size(); i > 1; --i) {
        std::swap(pts[i - 1], pts[rng.below(i)]);
    }

    std::vector<Vec2> boundary;
    Circle c = detail::welzl(pts, pts.size(), boundary);
    if (c.radius < 0.0) c = {pts[0], 0.0};
    return c;
}

inline Circle min_enclosing_circle(const std::vector<Vec2>& points) {
    return min_enclosing_circle(std::span<const Vec2>(points));
}

struct RootResult {
    double x = 0.0;
    int iterations = 0;
    double bracket_width = 0.0;
};

// Root of a monotone continuous function on [a, b] by bracket-preserving
// bisection with secant acceleration. Deterministic; returns the bracket
// midpoint once the bracket is narrower than tol.
inline RootResult solve_monotone_root_full(const std::function<double(double)>& f, double a,
                                           double b, double tol = 1e-12) {
    if (!(tol > 0.0)) fail(errc::invalid_parameter, "tol must be positive");
    if (!(a < b)) fail(errc::invalid_parameter, "need a < b");
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0, 0.0};
    if (fb == 0.0) return {b, 0, 0.0};
    if ((fa > 0.0) == (fb > 0.0)) fail(errc::no_bracket, "f(a) and f(b) have the same sign");

    int iters = 0;
    while ((b - a) > tol && iters < 200) {
        ++iters;
        double m = 0.5 * (a + b);
        // Secant candidate, accepted only if it stays safely interior.
        const double denom = fb - fa;
        if (denom != 0.0) {
            const double s = a - fa * (b - a) / denom;
            const double margin = 0.01 * (b - a);
            if (s > a + margin && s < b - margin) m = s;
        }
        const double fm = f(m);
        if (fm == 0.0) return {m, iters, 0.0};
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    return {0.5 * (a + b), iters, b - a};
}

inline double solve_monotone_root(const std::function<double(double)>& f, double a, double b,
                                  double tol = 1e-12) {
    return solve_monotone_root_full(f, a, b, tol).x;
}

// Area of the intersection of two disks of equal radius rho whose centers
// are d apart. Closed form; exact reference for every erosion area below.
inline double two_disk_intersection_area(double rho, double d) {
    if (!(rho > 0.0) || d < 0.0 || !std::isfinite(rho) || !std::isfinite(d))
        fail(errc::invalid_geometry, "two_disk_intersection_area needs rho > 0, d >= 0");
    if (d >= 2.0 * rho) return 0.0;
    if (d == 0.0) return pi * rho * rho;
    const double h = d / (2.0 * rho);
    return 2.0 * rho * rho * std::acos(h) - 0.5 * d * std::sqrt(4.0 * rho * rho - d * d);
}

}  // namespace diskpoly
