#pragma once

#include <cmath>

#include "diskpoly/body.hpp"
#include "diskpoly/common.hpp"
#include "diskpoly/core.hpp"

namespace diskpoly {

// Two-disk reference body: the intersection of two disks of radius
// 1/lambda. r_lens is the inradius after scaling to unit disks, so the
// generating centers are 2*(1 - r_lens)/lambda apart along the axis;
// r_lens == 1 degenerates to a single disk.
struct Lens {
    Vec2 center;
    double orientation = 0.0;  // axis through the two disk centers
    double r_lens = 1.0;       // in (0, 1]
    double lambda = 1.0;
};

// Area of the unit-radius lens with boundary length x, for x in [0, 2*pi].
inline double lens_area(double x) {
    if (!(x >= 0.0) || x > two_pi + 1e-12) fail(errc::out_of_domain, "lens_area needs x in [0, 2*pi]");
    return 0.5 * x - std::sin(0.5 * x);
}

// Inradius of the unit-radius lens with boundary length x.
inline double lens_inradius(double x) {
    if (!(x >= 0.0) || x > two_pi + 1e-12)
        fail(errc::out_of_domain, "lens_inradius needs x in [0, 2*pi]");
    return 1.0 - std::cos(0.25 * x);
}

// Inverse of lens_inradius: boundary length of the unit-radius lens with
// inradius r.
inline double lens_perimeter(double r) {
    if (!(r >= 0.0) || r > 1.0 + 1e-12) fail(errc::out_of_domain, "lens_perimeter needs r in [0, 1]");
    return 4.0 * std::acos(std::max(-1.0, 1.0 - r));
}

// Boundary length of the unit-radius lens of inradius r eroded by t,
// for t in [0, r].
inline double lens_eroded_perimeter(double r, double t) {
    if (t >= r) return 0.0;
    return 4.0 * (1.0 - t) * std::acos(std::min(1.0, (1.0 - r) / (1.0 - t)));
}

// Area of the unit-radius lens of inradius r eroded by t.
inline double lens_eroded_area(double r, double t) {
    if (t >= r) return 0.0;
    return two_disk_intersection_area(1.0 - t, 2.0 * (1.0 - r));
}

// Cheeger constant of the unit-radius lens with boundary length x, via the
// fixed point |L_t| = pi t^2 solved against the closed-form erosion area.
// There is no closed form for this one.
inline double lens_cheeger(double x, double tol = 1e-12) {
    if (!(x > 0.0) || x > two_pi + 1e-12)
        fail(errc::out_of_domain, "lens_cheeger needs x in (0, 2*pi]");
    const double r = lens_inradius(x);
    const auto balance = [&](double t) { return lens_eroded_area(r, t) - pi * t * t; };
    double hi = r * (1.0 - 1e-9);
    while (balance(hi) >= 0.0 && hi < r) hi = 0.5 * (hi + r);
    const double t_star = solve_monotone_root(balance, 1e-15, hi, tol);
    return 1.0 / t_star;
}

// Scaled variants for general lambda: area, inradius and Cheeger constant
// of the lens built from disks of radius 1/lambda with boundary length x.
inline double lens_area_scaled(double x, double lambda) {
    return lens_area(lambda * x) / (lambda * lambda);
}
inline double lens_inradius_scaled(double x, double lambda) {
    return lens_inradius(lambda * x) / lambda;
}
inline double lens_cheeger_scaled(double x, double lambda, double tol = 1e-12) {
    return lambda * lens_cheeger(lambda * x, tol);
}

// Ratio between the length of a boundary side and the length of its radial
// projection onto the inscribed circle of radius r, as a function of the
// angle phi the side spans at the incenter:
//   H(phi) = 1/r - asin((1-r) sin(phi)) / (r phi).
// Increasing and convex on (0, pi/2].
inline double side_projection_ratio(double phi, double r) {
    if (!(phi > 0.0) || phi > pi / 2.0 + 1e-12)
        fail(errc::out_of_domain, "side_projection_ratio needs phi in (0, pi/2]");
    if (!(r > 0.0) || !(r < 1.0)) fail(errc::out_of_domain, "side_projection_ratio needs r in (0, 1)");
    return 1.0 / r - std::asin((1.0 - r) * std::sin(phi)) / (r * phi);
}

// Explicit constants controlling how far H(phi) sits below H(pi/2):
//   C: for phi <= pi/6,  H(pi/2) - H(phi) >= 1/C
//   D: slope bound of the chord of H through phi = 0 and pi/2
//   C_tilde = 4*acos(1-r)*C/r,  D_tilde = 24*acos(1-r)*D/(pi*r).
struct SideRatioConstants {
    double C = 0.0;
    double D = 0.0;
    double C_tilde = 0.0;
    double D_tilde = 0.0;
};

inline SideRatioConstants side_ratio_constants(double r) {
    if (!(r > 0.0) || !(r < 1.0)) fail(errc::out_of_domain, "constants need r in (0, 1)");
    const double y = 1.0 - r;
    const double gap = 3.0 * std::asin(0.5 * y) - std::asin(y);
    const double chord = pi * y - 2.0 * std::asin(y);
    SideRatioConstants k;
    k.C = 0.5 * pi * r / gap;
    k.D = pi * pi * r / (2.0 * chord);
    k.C_tilde = 2.0 * pi * std::acos(y) / gap;
    k.D_tilde = 12.0 * pi * std::acos(y) / chord;
    return k;
}

inline DiskPolygon lens_to_body(const Lens& lens) {
    if (!(lens.r_lens > 0.0) || lens.r_lens > 1.0 + 1e-12)
        fail(errc::out_of_domain, "lens needs r_lens in (0, 1]");
    if (!(lens.lambda > 0.0)) fail(errc::invalid_parameter, "lens needs lambda > 0");
    const double half = (1.0 - std::min(lens.r_lens, 1.0)) / lens.lambda;
    const Vec2 axis = unit_vec(lens.orientation);
    return DiskPolygon::build({lens.center + half * axis, lens.center - half * axis}, lens.lambda);
}

}  // namespace diskpoly
