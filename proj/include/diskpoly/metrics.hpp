#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "diskpoly/body.hpp"
#include "diskpoly/cheeger.hpp"
#include "diskpoly/common.hpp"
#include "diskpoly/core.hpp"
#include "diskpoly/lens.hpp"

namespace diskpoly {

// Hausdorff distance between two convex bodies equals the sup-norm
// distance of their support functions. Between consecutive breakpoint
// normals (arc endpoints of either body) the difference is
// <u(theta), w> + k, so the maximum on each piece is attained at an
// endpoint or at the single interior critical angle of the cosine.
inline double hausdorff(const DiskPolygon& k1, const DiskPolygon& k2) {
    const double l1 = k1.lambda(), l2 = k2.lambda();
    if (std::abs(l1 - l2) > 1e-12 * std::max(l1, l2))
        fail(errc::scale_mismatch, "bodies have different disk radii");

    std::vector<double> cuts;
    cuts.reserve(2 * (k1.arc_count() + k2.arc_count()));
    for (const DiskPolygon* body : {&k1, &k2}) {
        for (const auto& a : body->arcs()) {
            cuts.push_back(wrap_angle(a.start));
            cuts.push_back(wrap_angle(a.start + a.width));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double best = 0.0;
    const std::size_t m = cuts.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double a = cuts[i];
        const double b = (i + 1 < m) ? cuts[i + 1] : cuts[0] + two_pi;
        if (b - a < 1e-15) continue;
        const double mid = 0.5 * (a + b);
        const auto r1 = k1.regime(mid);
        const auto r2 = k2.regime(mid);
        Vec2 w = r1.point - r2.point;
        double off = r1.offset - r2.offset;
        // Canonical sign so both argument orders run identical arithmetic.
        if (w.x < 0.0 || (w.x == 0.0 && (w.y < 0.0 || (w.y == 0.0 && off < 0.0)))) {
            w = -1.0 * w;
            off = -off;
        }
        const auto eval = [&](double th) {
            best = std::max(best, std::abs(dot(unit_vec(th), w) + off));
        };
        eval(a);
        eval(b);
        const double crit = std::atan2(w.y, w.x);
        for (double th : {crit, crit + pi}) {
            double lifted = a + wrap_angle(th - a);
            if (lifted < b) eval(lifted);
        }
    }
    return best / l1;
}

struct QuotientReport {
    double lambda = 1.0;
    double perimeter = 0.0;
    double area = 0.0;
    double inradius = 0.0;
    double cheeger_h = 0.0;
    double quotient_I = 0.0;   // area over the area of the perimeter-matched lens
    double quotient_in = 0.0;  // inradius over the lens inradius
    double quotient_Ch = 0.0;  // Cheeger constant over the lens Cheeger constant
};

inline QuotientReport quotients(const DiskPolygon& body, double tol = 1e-12) {
    QuotientReport q;
    q.lambda = body.lambda();
    q.perimeter = body.perimeter();
    q.area = body.area();
    q.inradius = body.inradius();
    q.cheeger_h = cheeger(body, tol).h;

    const double p_norm = std::min(two_pi, q.lambda * q.perimeter);
    q.quotient_I = q.area * q.lambda * q.lambda / lens_area(p_norm);
    q.quotient_in = q.inradius * q.lambda / lens_inradius(p_norm);
    q.quotient_Ch = (q.cheeger_h / q.lambda) / lens_cheeger(p_norm, tol);
    return q;
}

// Adaptive Simpson quadrature, used where a profile integral is checked
// against an exact area.
namespace detail {
inline double simpson_rec(const std::function<double(double)>& f, double a, double fa, double b,
                          double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int maxdepth = 30) {
    const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, maxdepth);
}

struct Check {
    std::string name;
    bool pass = false;
    double observed = 0.0;
    double bound = 0.0;
};

struct VerifyReport {
    QuotientReport q;
    std::vector<Check> checks;
    bool all_pass = true;   // every check below
    bool core_pass = true;  // all checks except the linear quotient bound
};

// Inequality battery for one body:
//   quotient_I_ge_1        area quotient at least 1
//   quotient_in_ge_1       inradius quotient at least 1
//   quotient_Ch_le_1       Cheeger quotient at most 1
//   profile_concave        eroded perimeter decreasing and concave in t
//   perimeter_dominates_lens  eroded perimeter at least the lens value
//   volume_integral        area equals the integral of the eroded perimeter
//   scaled_inclusion       (1 - r_L/r_K)-scaled body sits inside K_{r_L}
//   quotient_linear_bound  in - 1 <= 2 (I - 1), reported but not in core_pass
inline VerifyReport verify_body(const DiskPolygon& body, double tol = 1e-12) {
    VerifyReport rep;
    rep.q = quotients(body, tol);
    const double lam = body.lambda();
    const double r_k = body.inradius();
    const double p_norm = std::min(two_pi, lam * rep.q.perimeter);
    const double r_l = lens_inradius(p_norm) / lam;

    const auto push = [&](const std::string& name, bool pass, double observed, double bound) {
        rep.checks.push_back({name, pass, observed, bound});
        rep.all_pass = rep.all_pass && pass;
        if (name != "quotient_linear_bound") rep.core_pass = rep.core_pass && pass;
    };

    push("quotient_I_ge_1", rep.q.quotient_I >= 1.0 - 1e-9, rep.q.quotient_I, 1.0 - 1e-9);
    push("quotient_in_ge_1", rep.q.quotient_in >= 1.0 - 1e-9, rep.q.quotient_in, 1.0 - 1e-9);
    push("quotient_Ch_le_1", rep.q.quotient_Ch <= 1.0 + 1e-6, rep.q.quotient_Ch, 1.0 + 1e-6);

    {
        const ErosionProfile prof = body.erosion_profile(64);
        double worst_inc = 0.0, worst_2nd = 0.0;
        for (std::size_t i = 1; i < prof.f.size(); ++i) {
            worst_inc = std::max(worst_inc, prof.f[i] - prof.f[i - 1]);
            if (i + 1 < prof.f.size())
                worst_2nd = std::max(worst_2nd, prof.f[i + 1] - 2.0 * prof.f[i] + prof.f[i - 1]);
        }
        push("profile_concave", worst_inc <= 1e-9 && worst_2nd <= 1e-8,
             std::max(worst_inc, worst_2nd), 1e-8);
    }

    {
        double worst = 0.0;  // lens value minus body value, positive = violation
        const int n = 64;
        for (int i = 1; i <= n; ++i) {
            const double t = r_l * static_cast<double>(i) / n;
            const double tc = std::min(t, r_k * (1.0 - 1e-9));
            const double f_k = body.erode(tc).perimeter();
            const double f_l = lens_eroded_perimeter(lam * r_l, lam * tc) / lam;
            worst = std::max(worst, f_l - f_k);
        }
        push("perimeter_dominates_lens", worst <= 1e-9, worst, 1e-9);
    }

    {
        const double area = rep.q.area;
        const auto f = [&](double t) {
            if (r_k - t <= r_k * 1e-9) return 0.0;
            return body.erode(t).perimeter();
        };
        const double integral = adaptive_simpson(f, 0.0, r_k, 2e-7 * area);
        const double rel = std::abs(integral - area) / area;
        push("volume_integral", rel <= 1e-6, rel, 1e-6);
    }

    {
        bool ok = true;
        double margin = 0.0;
        if (r_k - r_l > 1e-12) {
            const DiskPolygon kt = body.erode(r_l);
            const Vec2 o = body.incenter();
            const double s = (r_k - r_l) / r_k;
            for (int j = 0; j < 256 && ok; ++j) {
                const double th = two_pi * j / 256.0;
                const Vec2 x = body.boundary_point_normalized(th) / lam;
                const Vec2 mapped = o + s * (x - o);
                ok = kt.contains(mapped, 1e-9);
            }
        }
        push("scaled_inclusion", ok, margin, 1e-9);
    }

    push("quotient_linear_bound",
         rep.q.quotient_in - 1.0 <= 2.0 * (rep.q.quotient_I - 1.0) + 1e-8,
         rep.q.quotient_in - 1.0, 2.0 * (rep.q.quotient_I - 1.0) + 1e-8);

    return rep;
}

// ---------------------------------------------------------------------------
// Best-fit lens search (multi-start Nelder-Mead on center, orientation and
// optionally the lens inradius). A local method; results are upper bounds
// on the true minimal Hausdorff distance.

enum class FitMode { free_perimeter, match_perimeter };

struct BestLensFit {
    Lens lens;
    double d_h = 0.0;
    bool converged = false;
    int starts_tried = 0;
};

namespace detail {

struct NelderMead {
    std::function<double(const std::vector<double>&)> f;
    int evals = 0;
    int cap = 2000;

    double call(const std::vector<double>& x) {
        ++evals;
        return f(x);
    }

    // Returns true when the simplex collapsed below size_tol before the
    // evaluation budget ran out.
    bool run(std::vector<double>& best_x, double& best_f, const std::vector<double>& x0,
             const std::vector<double>& steps, double size_tol) {
        const std::size_t n = x0.size();
        std::vector<std::vector<double>> xs(n + 1, x0);
        std::vector<double> fs(n + 1);
        for (std::size_t i = 0; i < n; ++i) xs[i + 1][i] += steps[i];
        for (std::size_t i = 0; i <= n; ++i) fs[i] = call(xs[i]);

        while (evals < cap) {
            std::vector<std::size_t> order(n + 1);
            for (std::size_t i = 0; i <= n; ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
            const std::size_t lo = order[0], hi = order[n], hi2 = order[n - 1];

            double size = 0.0;
            for (std::size_t i = 0; i <= n; ++i) {
                for (std::size_t d = 0; d < n; ++d)
                    size = std::max(size, std::abs(xs[i][d] - xs[lo][d]));
            }
            if (size <= size_tol) {
                best_x = xs[lo];
                best_f = fs[lo];
                return true;
            }

            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i <= n; ++i) {
                if (i == hi) continue;
                for (std::size_t d = 0; d < n; ++d) centroid[d] += xs[i][d];
            }
            for (double& c : centroid) c /= static_cast<double>(n);

            const auto blend = [&](double coef) {
                std::vector<double> x(n);
                for (std::size_t d = 0; d < n; ++d)
                    x[d] = centroid[d] + coef * (centroid[d] - xs[hi][d]);
                return x;
            };

            std::vector<double> xr = blend(1.0);
            const double fr = call(xr);
            if (fr < fs[lo]) {
                std::vector<double> xe = blend(2.0);
                const double fe = call(xe);
                if (fe < fr) {
                    xs[hi] = std::move(xe);
                    fs[hi] = fe;
                } else {
                    xs[hi] = std::move(xr);
                    fs[hi] = fr;
                }
            } else if (fr < fs[hi2]) {
                xs[hi] = std::move(xr);
                fs[hi] = fr;
            } else {
                std::vector<double> xc = blend(fr < fs[hi] ? 0.5 : -0.5);
                const double fc = call(xc);
                if (fc < std::min(fr, fs[hi])) {
                    xs[hi] = std::move(xc);
                    fs[hi] = fc;
                } else {
                    for (std::size_t i = 0; i <= n; ++i) {
                        if (i == lo) continue;
                        for (std::size_t d = 0; d < n; ++d)
                            xs[i][d] = xs[lo][d] + 0.5 * (xs[i][d] - xs[lo][d]);
                        fs[i] = call(xs[i]);
                    }
                }
            }
        }
        std::size_t lo = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (fs[i] < fs[lo]) lo = i;
        best_x = xs[lo];
        best_f = fs[lo];
        return false;
    }
};

}  // namespace detail

inline BestLensFit best_fit_lens(const DiskPolygon& body, FitMode mode, int starts = 16,
                                 int max_evals_per_start = 2000) {
    const double lam = body.lambda();
    const double scale = 1.0 / lam;
    const double p_norm = std::min(two_pi, lam * body.perimeter());
    const double r0 = std::clamp(lens_inradius(p_norm), 1e-6, 1.0);
    const Vec2 o = body.incenter();
    const bool fit_r = (mode == FitMode::free_perimeter);
    const std::size_t nd = fit_r ? 4 : 3;

    const auto make_lens = [&](const std::vector<double>& x) {
        Lens lens;
        lens.center = {x[0], x[1]};
        lens.orientation = x[2];
        lens.r_lens = fit_r ? std::clamp(x[3], 1e-9, 1.0) : r0;
        lens.lambda = lam;
        return lens;
    };
    const auto objective = [&](const std::vector<double>& x) {
        double penalty = 0.0;
        if (fit_r) penalty = 10.0 * scale * std::abs(x[3] - std::clamp(x[3], 1e-9, 1.0));
        return hausdorff(body, lens_to_body(make_lens(x))) + penalty;
    };

    BestLensFit fit;
    fit.starts_tried = starts;
    double best_f = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    bool best_converged = false;

    for (int k = 0; k < starts; ++k) {
        std::vector<double> x0 = {o.x, o.y, pi * k / starts};
        std::vector<double> steps = {scale * (0.1 * r0 + 1e-3), scale * (0.1 * r0 + 1e-3), 0.2};
        if (fit_r) {
            x0.push_back(r0);
            steps.push_back(0.1 * std::min(r0, 1.0 - r0) + 1e-3);
        }
        detail::NelderMead nm{objective, 0, max_evals_per_start};
        std::vector<double> x = x0;
        double fx = 0.0;
        bool converged = nm.run(x, fx, x0, steps, 1e-12 * scale);
        // One polish pass from the found optimum with a tight simplex.
        if (nm.evals < nm.cap) {
            std::vector<double> fine(nd, 1e-7 * scale);
            std::vector<double> x2;
            double fx2 = 0.0;
            const bool c2 = nm.run(x2, fx2, x, fine, 1e-12 * scale);
            if (fx2 < fx) {
                x = std::move(x2);
                fx = fx2;
                converged = c2;
            }
        }
        if (fx < best_f) {
            best_f = fx;
            best_x = std::move(x);
            best_converged = converged;
        }
    }

    fit.lens = make_lens(best_x);
    fit.lens.orientation = wrap_angle(fit.lens.orientation);
    fit.d_h = hausdorff(body, lens_to_body(fit.lens));
    fit.converged = best_converged;
    return fit;
}

// ---------------------------------------------------------------------------
// Big/small side-angle dichotomy.

enum class AngleLabel { big, small, unresolved };

struct AngleClassification {
    std::vector<AngleLabel> labels;
    double eps_used = 0.0;
    double tilde_t_used = 0.0;
    bool out_of_regime = false;  // thresholds overlap; eps too large for the dichotomy
    int n_big = 0;
    int n_small = 0;
    int n_unresolved = 0;
};

// Labels each side angle big (near pi/2) or small (near 0) with the
// threshold tilde_T * sqrt(eps) / N. Big takes precedence where the
// thresholds overlap, which only happens out of regime.
inline AngleClassification classify_angles(const AngleSpectrum& spec, double eps,
                                           double tilde_t = 0.0) {
    if (!(eps > 0.0)) fail(errc::invalid_parameter, "classification needs eps > 0");
    AngleClassification out;
    if (tilde_t <= 0.0) tilde_t = std::max(2.0 * pi * pi, 6.0 * pi * pi / (pi - 2.0));
    out.eps_used = eps;
    out.tilde_t_used = tilde_t;
    const double n = static_cast<double>(std::max<std::size_t>(spec.n_sides, 1));
    const double margin = tilde_t * std::sqrt(eps) / n;
    out.out_of_regime = margin >= pi / 4.0;
    out.labels.reserve(spec.n_sides);
    for (double phi : spec.phis) {
        AngleLabel label;
        if (phi >= pi / 2.0 - margin) {
            label = AngleLabel::big;
            ++out.n_big;
        } else if (phi <= margin) {
            label = AngleLabel::small;
            ++out.n_small;
        } else {
            label = AngleLabel::unresolved;
            ++out.n_unresolved;
        }
        out.labels.push_back(label);
    }
    return out;
}

}  // namespace diskpoly
