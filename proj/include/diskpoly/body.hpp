#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "diskpoly/common.hpp"
#include "diskpoly/core.hpp"

namespace diskpoly {

struct ErosionProfile {
    std::vector<double> ts;  // increasing, in [0, inradius)
    std::vector<double> f;   // boundary length of the eroded body
    std::vector<double> g;   // area of the eroded body
};

struct AngleSpectrum {
    std::vector<double> phis;          // angle at the incenter spanned by each side
    std::vector<double> side_lengths;  // arc length of each side
    std::size_t n_sides = 0;
    double r = 0.0;                    // inradius the projection uses
    double sum_phi = 0.0;
    bool right_angle_bounded = true;   // all phi <= pi/2 (+1e-9)
};

// Convex body given as the intersection of finitely many disks of equal
// radius 1/lambda. Stored normalized to unit disks (centers scaled by
// lambda); all public accessors are in the caller's units. Immutable after
// construction.
class DiskPolygon {
public:
    struct Arc {
        int center = 0;      // index into centers()
        double start = 0.0;  // first outward-normal angle, in [0, 2*pi)
        double width = 0.0;  // angular extent, positive, CCW
    };

    static DiskPolygon build(std::vector<Vec2> centers, double lambda) {
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            fail(errc::invalid_parameter, "lambda must be positive");
        if (centers.empty()) fail(errc::empty_point_set, "need at least one disk center");
        for (Vec2& c : centers) {
            if (!std::isfinite(c.x) || !std::isfinite(c.y))
                fail(errc::invalid_geometry, "non-finite center");
            c = lambda * c;
        }
        dedupe(centers);
        const Circle mec = min_enclosing_circle(centers);
        if (mec.radius >= 1.0 - 1e-13)
            fail(errc::empty_or_degenerate_body,
                 "enclosing radius of the centers reaches the disk radius");
        return DiskPolygon(std::move(centers), lambda, mec);
    }

    double lambda() const { return lambda_; }
    double disk_radius() const { return 1.0 / lambda_; }

    std::size_t disk_count() const { return centers_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }

    std::span<const Vec2> centers_normalized() const { return centers_; }
    std::span<const Arc> arcs() const { return arcs_; }
    std::span<const Vec2> vertices_normalized() const { return vertices_; }

    std::vector<Vec2> centers() const {
        std::vector<Vec2> out(centers_.begin(), centers_.end());
        for (Vec2& c : out) c = c / lambda_;
        return out;
    }

    Vec2 incenter() const { return incenter_ / lambda_; }
    double inradius() const { return (1.0 - mec_radius_) / lambda_; }
    Vec2 incenter_normalized() const { return incenter_; }
    double mec_radius_normalized() const { return mec_radius_; }

    double perimeter() const {
        double s = 0.0;
        for (const Arc& a : arcs_) s += a.width;
        return s / lambda_;
    }

    double area() const {
        if (arcs_.size() == 1) return pi / (lambda_ * lambda_);
        double twice_poly = 0.0;
        const std::size_t n = vertices_.size();
        for (std::size_t k = 0; k < n; ++k) {
            twice_poly += cross(vertices_[k], vertices_[(k + 1) % n]);
        }
        double segments = 0.0;
        for (const Arc& a : arcs_) segments += 0.5 * (a.width - std::sin(a.width));
        return (0.5 * twice_poly + segments) / (lambda_ * lambda_);
    }

    // Inner parallel body at distance t: same centers, disk radius reduced
    // by t. The normalized representation is rescaled so the result again
    // has unit disks.
    DiskPolygon erode(double t) const {
        if (t < 0.0 || !std::isfinite(t)) fail(errc::invalid_parameter, "erosion distance < 0");
        if (t == 0.0) return *this;
        const double r = inradius();
        if (t >= r) fail(errc::erosion_empty, "erosion distance reaches the inradius");
        const double factor = 1.0 / (1.0 - lambda_ * t);
        std::vector<Vec2> cs(centers_.begin(), centers_.end());
        for (Vec2& c : cs) c = factor * c;
        const Circle mec{factor * incenter_, factor * mec_radius_};
        return DiskPolygon(std::move(cs), lambda_ * factor, mec);
    }

    ErosionProfile erosion_profile(int n) const {
        if (n < 2) fail(errc::invalid_parameter, "profile needs at least two samples");
        const double r = inradius();
        const double t_max = r * (1.0 - 1e-9);
        ErosionProfile p;
        p.ts.reserve(n);
        p.f.reserve(n);
        p.g.reserve(n);
        for (int i = 0; i < n; ++i) {
            const double t = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
            p.ts.push_back(t);
            if (r - t <= 1e-12) {  // degenerate point body, integrable endpoint
                p.f.push_back(0.0);
                p.g.push_back(0.0);
                continue;
            }
            const DiskPolygon kt = erode(t);
            p.f.push_back(kt.perimeter());
            p.g.push_back(kt.area());
        }
        return p;
    }

    // Support function h(theta) = max_{x in K} <u(theta), x>.
    double support(double theta) const { return support_normalized(theta) / lambda_; }

    double support_normalized(double theta) const {
        const auto reg = regime(theta);
        return dot(unit_vec(theta), reg.point) + reg.offset;
    }

    // Boundary regime at outward-normal angle theta: either an arc (point =
    // disk center, offset = 1) or a vertex (offset = 0). The support
    // function on a regime is <u, point> + offset.
    struct SupportRegime {
        Vec2 point;
        double offset = 0.0;
    };

    SupportRegime regime(double theta) const {
        const double th = wrap_angle(theta);
        const std::size_t n = arcs_.size();
        std::size_t idx;
        if (th < arcs_[0].start) {
            idx = n - 1;
        } else {
            std::size_t lo = 0, hi = n - 1;
            while (lo < hi) {  // last arc with start <= th
                const std::size_t mid = (lo + hi + 1) / 2;
                if (arcs_[mid].start <= th) lo = mid; else hi = mid - 1;
            }
            idx = lo;
        }
        double lift = th - arcs_[idx].start;
        if (lift < 0.0) lift += two_pi;
        if (lift <= arcs_[idx].width) return {centers_[arcs_[idx].center], 1.0};
        return {vertices_[idx], 0.0};
    }

    // Boundary point whose outward normal is theta (a vertex where theta
    // falls in a normal cone). Normalized coordinates.
    Vec2 boundary_point_normalized(double theta) const {
        const auto reg = regime(theta);
        if (reg.offset == 0.0) return reg.point;
        return reg.point + unit_vec(wrap_angle(theta));
    }

    bool contains(Vec2 p, double tol) const {
        const Vec2 q = lambda_ * p;
        const double lim = 1.0 + lambda_ * tol;
        for (const Vec2& c : centers_) {
            if (dist(q, c) > lim) return false;
        }
        return true;
    }

    // Keeps exactly the disks whose boundary touches the inscribed disk;
    // inball and incenter are unchanged, the body can only grow.
    DiskPolygon reduce_to_touching() const {
        const double tol = 1e-9;
        std::vector<Vec2> keep;
        keep.reserve(centers_.size());
        for (const Vec2& c : centers_) {
            if (dist(c, incenter_) >= mec_radius_ - tol) keep.push_back(c);
        }
        return DiskPolygon(std::move(keep), lambda_, Circle{incenter_, mec_radius_});
    }

    // Splits every arc at the point where its disk touches the inball and
    // measures, for each resulting side, the angle it spans at the
    // incenter and its arc length. Requires the touching form.
    AngleSpectrum angle_spectrum() const {
        if (centers_.size() < 2) fail(errc::no_vertices, "a single disk has no sides");
        const double tol = 1e-9;
        for (const Vec2& c : centers_) {
            if (dist(c, incenter_) < mec_radius_ - tol)
                fail(errc::not_touching_form, "disk does not touch the inscribed disk");
        }

        AngleSpectrum spec;
        spec.r = inradius();
        const std::size_t n = arcs_.size();
        for (std::size_t k = 0; k < n; ++k) {
            const Arc& a = arcs_[k];
            const Vec2 c = centers_[a.center];
            double theta_touch = wrap_angle(angle_of(incenter_ - c));
            double lift = theta_touch - a.start;
            if (lift < 0.0) lift += two_pi;
            if (lift > a.width) {
                // The tangency point of a touching contributing disk lies on
                // its arc; only roundoff can push it outside.
                const double over = std::min(lift - a.width, two_pi - lift);
                if (over > 1e-6) fail(errc::invalid_geometry, "tangency point off its arc");
                lift = (lift - a.width < two_pi - lift) ? a.width : 0.0;
            }
            const Vec2 touch = c + unit_vec(a.start + lift);
            const Vec2 v_start = vertices_[(k + n - 1) % n];
            const Vec2 v_end = vertices_[k];

            const double psi[2] = {lift, a.width - lift};
            const Vec2 far_point[2] = {v_start, v_end};
            for (int side = 0; side < 2; ++side) {
                if (psi[side] < 1e-12) continue;  // tangency at a vertex
                const Vec2 da = far_point[side] - incenter_;
                const Vec2 db = touch - incenter_;
                const double phi = std::atan2(std::abs(cross(da, db)), dot(da, db));
                spec.phis.push_back(phi);
                spec.side_lengths.push_back(psi[side] / lambda_);
                if (phi > pi / 2.0 + 1e-9) spec.right_angle_bounded = false;
            }
        }
        spec.n_sides = spec.phis.size();
        double s = 0.0;
        for (double phi : spec.phis) s += phi;
        spec.sum_phi = s;
        return spec;
    }

private:
    DiskPolygon(std::vector<Vec2> centers, double lambda, const Circle& mec)
        : lambda_(lambda), incenter_(mec.center), mec_radius_(mec.radius) {
        assemble(std::move(centers));
    }

    static void dedupe(std::vector<Vec2>& cs) {
        double scale = 1.0;
        for (const Vec2& c : cs) scale = std::max({scale, std::abs(c.x), std::abs(c.y)});
        const double tol = 1e-14 * scale;
        std::vector<Vec2> out;
        out.reserve(cs.size());
        for (const Vec2& c : cs) {
            bool dup = false;
            for (const Vec2& q : out) {
                if (std::abs(c.x - q.x) <= tol && std::abs(c.y - q.y) <= tol) {
                    dup = true;
                    break;
                }
            }
            if (!dup) out.push_back(c);
        }
        cs = std::move(out);
    }

    void assemble(std::vector<Vec2> cs) {
        if (cs.size() == 1) {
            centers_ = std::move(cs);
            arcs_ = {Arc{0, 0.0, two_pi}};
            return;
        }

        // On each circle, the boundary arc is the set of normals whose
        // boundary point lies inside every other disk; each pairwise
        // constraint is an angular interval around the direction of the
        // other center.
        std::vector<Arc> arcs;
        std::vector<int> keep;
        const std::size_t n = cs.size();
        for (std::size_t i = 0; i < n; ++i) {
            std::optional<AngleInterval> iv = AngleInterval{0.0, pi};
            for (std::size_t j = 0; j < n && iv; ++j) {
                if (j == i) continue;
                const Vec2 w = cs[j] - cs[i];
                const double d = norm(w);
                iv = intersect(*iv, AngleInterval{angle_of(w), std::acos(std::min(1.0, 0.5 * d))});
            }
            if (!iv || iv->half_width <= 5e-13) continue;  // redundant disk
            keep.push_back(static_cast<int>(i));
            arcs.push_back(Arc{static_cast<int>(keep.size()) - 1,
                               wrap_angle(iv->mid - iv->half_width), 2.0 * iv->half_width});
        }
        if (arcs.empty()) fail(errc::empty_or_degenerate_body, "no contributing disk");

        centers_.reserve(keep.size());
        for (int i : keep) centers_.push_back(cs[i]);

        std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
            return a.start < b.start || (a.start == b.start && a.center < b.center);
        });
        arcs_ = std::move(arcs);

        if (arcs_.size() == 1) {
            // Only one disk contributes; its residual interval must be the
            // full circle or the representation is inconsistent.
            if (arcs_[0].width < two_pi - 1e-9)
                fail(errc::vertex_mismatch, "single open arc cannot close the boundary");
            centers_ = {centers_[arcs_[0].center]};
            arcs_ = {Arc{0, 0.0, two_pi}};
            return;
        }

        // Consecutive arcs must meet at a common vertex.
        double scale = 1.0;
        for (const Vec2& c : centers_) scale = std::max({scale, std::abs(c.x), std::abs(c.y)});
        const double vtol = 1e-9 * scale;
        const std::size_t m = arcs_.size();
        vertices_.reserve(m);
        for (std::size_t k = 0; k < m; ++k) {
            const Arc& a = arcs_[k];
            const Arc& b = arcs_[(k + 1) % m];
            const Vec2 pa = centers_[a.center] + unit_vec(a.start + a.width);
            const Vec2 pb = centers_[b.center] + unit_vec(b.start);
            if (dist(pa, pb) > vtol)
                fail(errc::vertex_mismatch, "adjacent boundary arcs do not share an endpoint");
            vertices_.push_back(0.5 * (pa + pb));
        }
    }

    double lambda_ = 1.0;
    std::vector<Vec2> centers_;   // normalized (unit disks), contributing only
    std::vector<Arc> arcs_;       // sorted by start normal, CCW
    std::vector<Vec2> vertices_;  // vertices_[k] joins arcs_[k] and arcs_[k+1]
    Vec2 incenter_;               // normalized
    double mec_radius_ = 0.0;     // normalized; inradius = 1 - mec_radius
};

}  // namespace diskpoly
