#pragma once

#include <cmath>

#include "diskpoly/body.hpp"
#include "diskpoly/common.hpp"
#include "diskpoly/core.hpp"

namespace diskpoly {

struct CheegerResult {
    double t_star = 0.0;   // inner-parallel distance with |K_t| = pi t^2
    double h = 0.0;        // Cheeger constant, 1/t_star
    int iterations = 0;
    double residual = 0.0; // |area(K_t*) - pi t_star^2|
};

// Cheeger constant of a disk-polygon via the fixed point
// |K_t| = pi t^2 on (0, inradius). The balance function is strictly
// decreasing (erosion area falls, pi t^2 grows), so the root is unique.
inline CheegerResult cheeger(const DiskPolygon& body, double tol = 1e-12) {
    const double r = body.inradius();
    const auto balance = [&](double t) {
        return body.erode(t).area() - pi * t * t;
    };

    double lo = r * 1e-12;
    double hi = r * (1.0 - 1e-9);
    // The bracket signs hold for every valid body, but roundoff near the
    // degenerate end is checked explicitly and the endpoint pulled in.
    for (int guard = 0; guard < 60 && balance(hi) >= 0.0; ++guard) hi = 0.5 * (hi + r);
    for (int guard = 0; guard < 60 && balance(lo) <= 0.0; ++guard) lo *= 0.5;

    const RootResult root = solve_monotone_root_full(balance, lo, hi, tol * r);
    CheegerResult out;
    out.t_star = root.x;
    out.h = 1.0 / root.x;
    out.iterations = root.iterations;
    out.residual = std::abs(balance(root.x));
    return out;
}

}  // namespace diskpoly
