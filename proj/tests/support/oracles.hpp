#pragma once

// Test-only reference computations, kept independent of the library's
// algorithm paths they are used to check.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "diskpoly/core.hpp"
#include "diskpoly/rng.hpp"

namespace oracles {

using diskpoly::Vec2;

// Minimum enclosing circle by brute force: the optimum is either the
// diameter circle of some pair or the circumcircle of some triple.
inline diskpoly::Circle mec_exhaustive(const std::vector<Vec2>& pts) {
    using diskpoly::dist;
    const auto covers = [&](const diskpoly::Circle& c) {
        for (const Vec2& p : pts) {
            if (dist(c.center, p) > c.radius + 1e-10) return false;
        }
        return true;
    };
    diskpoly::Circle best{pts[0], 0.0};
    if (covers(best)) return best;
    best.radius = std::numeric_limits<double>::infinity();
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            diskpoly::Circle c{0.5 * (pts[i] + pts[j]), 0.5 * dist(pts[i], pts[j])};
            if (c.radius < best.radius && covers(c)) best = c;
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec2 a = pts[i], b = pts[j], d = pts[k];
                const double det = 2.0 * diskpoly::cross(b - a, d - a);
                if (std::abs(det) < 1e-14) continue;
                const double nb = diskpoly::norm2(b - a), nd = diskpoly::norm2(d - a);
                const Vec2 rel{((d - a).y * nb - (b - a).y * nd) / det,
                               ((b - a).x * nd - (d - a).x * nb) / det};
                diskpoly::Circle cc{a + rel, diskpoly::norm(rel)};
                if (cc.radius < best.radius && covers(cc)) best = cc;
            }
        }
    }
    return best;
}

// Root of cos(t) = t by plain fixed-point iteration.
inline double dottie_number() {
    double t = 0.7;
    for (int i = 0; i < 500; ++i) t = std::cos(t);
    return t;
}

// Monte-Carlo rejection-sampling area of an intersection of unit disks.
inline double mc_area(const std::vector<Vec2>& centers, double radius, std::uint64_t seed,
                      std::size_t samples, double box_lo_x, double box_hi_x, double box_lo_y,
                      double box_hi_y) {
    diskpoly::Xoshiro256pp rng(seed);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const Vec2 p{rng.uniform(box_lo_x, box_hi_x), rng.uniform(box_lo_y, box_hi_y)};
        bool inside = true;
        for (const Vec2& c : centers) {
            if (diskpoly::dist(p, c) > radius) {
                inside = false;
                break;
            }
        }
        if (inside) ++hits;
    }
    const double box = (box_hi_x - box_lo_x) * (box_hi_y - box_lo_y);
    return box * static_cast<double>(hits) / static_cast<double>(samples);
}

// Arc length by dense polyline sampling of circle arcs.
inline double polyline_arc_length(Vec2 center, double radius, double start, double width,
                                  int segments) {
    double len = 0.0;
    Vec2 prev = center + radius * diskpoly::unit_vec(start);
    for (int i = 1; i <= segments; ++i) {
        const Vec2 cur = center + radius * diskpoly::unit_vec(start + width * i / segments);
        len += diskpoly::dist(prev, cur);
        prev = cur;
    }
    return len;
}

}  // namespace oracles
