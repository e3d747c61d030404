#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "diskpoly/body.hpp"
#include "diskpoly/common.hpp"
#include "diskpoly/lens.hpp"
#include "diskpoly/rng.hpp"

namespace diskpoly {

// m disk centers drawn uniformly from the disk of radius spread about the
// origin (rejection sampling from the square, so the draw is free of libm
// calls), assembled at lambda = 1. spread < 1 keeps every draw a valid
// body. Identical (seed, m, spread) give identical bodies.
inline DiskPolygon random_body(std::uint64_t seed, int m, double spread) {
    if (m < 1) fail(errc::invalid_parameter, "need at least one disk");
    if (!(spread > 0.0) || !(spread < 1.0)) fail(errc::invalid_parameter, "need spread in (0, 1)");
    Xoshiro256pp rng(seed);
    std::vector<Vec2> centers;
    centers.reserve(m);
    for (int i = 0; i < m; ++i) {
        double x, y;
        do {
            x = rng.uniform(-1.0, 1.0);
            y = rng.uniform(-1.0, 1.0);
        } while (x * x + y * y > 1.0);
        centers.push_back({spread * x, spread * y});
    }
    return DiskPolygon::build(std::move(centers), 1.0);
}

struct FamilyBody {
    DiskPolygon body;
    double realized_eps = 0.0;  // measured area-quotient excess, quotient_I - 1
    double scale = 0.0;         // internal perturbation scale that realized it
};

namespace detail {

struct FamilyShape {
    double theta0 = 0.0;
    int n_extra = 0;
    double side[3] = {0, 0, 0};  // 0 or pi: which end of the axis the extra sits near
    double sign[3] = {0, 0, 0};
    double xi[3] = {0, 0, 0};    // angular offset factors
};

inline FamilyShape family_shape(std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    FamilyShape s;
    s.theta0 = two_pi * rng.uniform();
    s.n_extra = 1 + static_cast<int>(rng.below(3));
    // Distinct (side, sign) combinations keep the extra disks apart from
    // one another at every perturbation scale.
    int combos[4] = {0, 1, 2, 3};
    for (int i = 3; i > 0; --i) std::swap(combos[i], combos[rng.below(i + 1)]);
    for (int j = 0; j < s.n_extra; ++j) {
        s.side[j] = (combos[j] & 1) ? pi : 0.0;
        s.sign[j] = (combos[j] & 2) ? -1.0 : 1.0;
        s.xi[j] = rng.uniform(0.6, 1.4);
    }
    return s;
}

inline DiskPolygon family_body_at(const FamilyShape& shape, double s) {
    // Both the base-lens thinness and the angular offsets of the extra
    // disks shrink with s, which keeps the distance-to-lens comparable to
    // the square root of the realized area-quotient excess across scales.
    const double rho = 0.85 * s;
    std::vector<Vec2> centers = {rho * unit_vec(shape.theta0), rho * unit_vec(shape.theta0 + pi)};
    for (int j = 0; j < shape.n_extra; ++j) {
        const double ang = shape.theta0 + shape.side[j] + shape.sign[j] * shape.xi[j] * s;
        centers.push_back(rho * unit_vec(ang));
    }
    return DiskPolygon::build(std::move(centers), 1.0);
}

inline double family_eps_of(const DiskPolygon& body) {
    const double p = std::min(two_pi, body.perimeter());
    return body.area() / lens_area(p) - 1.0;
}

}  // namespace detail

// Near-lens bodies: a two-disk base plus 1-3 extra disks that touch the
// inscribed disk, with the perturbation scale bisected until the realized
// area-quotient excess lands in [eps_target/2, 2*eps_target]. The shape
// (axis, number and placement of extras) depends only on the seed, so a
// target sweep with one seed scales a single shape.
inline FamilyBody lens_perturbation_family(double eps_target, std::uint64_t seed) {
    if (!(eps_target > 0.0) || eps_target > 0.1)
        fail(errc::invalid_parameter, "eps_target must lie in (0, 0.1]");
    const detail::FamilyShape shape = detail::family_shape(seed);

    double lo = 0.0, hi = 1.0;
    DiskPolygon body = detail::family_body_at(shape, hi);
    double eps = detail::family_eps_of(body);
    double s = hi;
    if (eps < 0.5 * eps_target)
        fail(errc::family_tuning_failed, "target excess not reachable for this shape");

    for (int step = 0; step < 60; ++step) {
        if (eps >= 0.5 * eps_target && eps <= 2.0 * eps_target) {
            return {std::move(body), eps, s};
        }
        if (eps < eps_target) lo = s = 0.5 * (lo + hi);
        else hi = s = 0.5 * (lo + hi);
        body = detail::family_body_at(shape, s);
        eps = detail::family_eps_of(body);
    }
    fail(errc::family_tuning_failed, "bisection did not land in the target band");
}

}  // namespace diskpoly
