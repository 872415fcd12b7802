#include "isacsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isacsim/errors.hpp"
#include "isacsim/units.hpp"

namespace isacsim {

double norm(Point2 p) { return std::hypot(p.x, p.y); }
double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

Point2 circle_point(const Circle& c, double theta) {
    return {c.center.x + c.radius * std::cos(theta), c.center.y + c.radius * std::sin(theta)};
}

Point2 ellipse_point(const Ellipse& e, double theta) {
    const double cr = std::cos(e.rotation), sr = std::sin(e.rotation);
    const double u = e.s1 * std::cos(theta), v = e.s2 * std::sin(theta);
    return {e.center.x + cr * u - sr * v, e.center.y + sr * u + cr * v};
}

BoundaryPolyline::BoundaryPolyline(std::vector<Point2> points) : points_(std::move(points)) {
    if (points_.size() < 3)
        throw NumericError("BoundaryPolyline requires at least 3 vertices");
    for (const auto& p : points_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw NumericError("BoundaryPolyline vertex is not finite");
}

double BoundaryPolyline::area() const {
    double acc = 0.0;
    const std::size_t n = points_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = points_[i];
        const Point2& b = points_[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::abs(acc);
}

namespace {

double segment_distance(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + ab * t);
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    auto orient = [](Point2 p, Point2 q, Point2 r) {
        const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        return (v > 0.0) - (v < 0.0);
    };
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 != o2 && o3 != o4;
}

} // namespace

bool BoundaryPolyline::contains(Point2 p) const {
    const std::size_t n = points_.size();

    // Boundary inclusive: proximity to any edge counts as inside.
    Point2 lo, hi;
    bounding_box(lo, hi);
    const double scale = std::max({std::abs(lo.x), std::abs(lo.y), std::abs(hi.x), std::abs(hi.y), 1.0});
    const double tol = 1e-9 * scale;
    for (std::size_t i = 0; i < n; ++i)
        if (segment_distance(p, points_[i], points_[(i + 1) % n]) <= tol) return true;

    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2& pi = points_[i];
        const Point2& pj = points_[j];
        if ((pi.y > p.y) != (pj.y > p.y)) {
            const double xc = (pj.x - pi.x) * (p.y - pi.y) / (pj.y - pi.y) + pi.x;
            if (p.x < xc) inside = !inside;
        }
    }
    return inside;
}

bool BoundaryPolyline::is_simple() const {
    const std::size_t n = points_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // skip edges sharing a vertex
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_intersect(points_[i], points_[(i + 1) % n], points_[j], points_[(j + 1) % n]))
                return false;
        }
    }
    return true;
}

void BoundaryPolyline::bounding_box(Point2& lo, Point2& hi) const {
    lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    hi = {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& p : points_) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
}

double shape_area(const SensingShape& shape) {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return kPi * s.radius * s.radius;
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return kPi * s.s1 * s.s2;
            } else {
                return s.area();
            }
        },
        shape);
}

bool shape_contains(const SensingShape& shape, Point2 p) {
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                const double d2 = dot(p - s.center, p - s.center);
                return d2 <= s.radius * s.radius * (1.0 + 1e-12) + 1e-300;
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                const double cr = std::cos(s.rotation), sr = std::sin(s.rotation);
                const Point2 q = p - s.center;
                const double u = cr * q.x + sr * q.y;
                const double v = -sr * q.x + cr * q.y;
                const double r = (u / s.s1) * (u / s.s1) + (v / s.s2) * (v / s.s2);
                return r <= 1.0 + 1e-9;
            } else {
                return s.contains(p);
            }
        },
        shape);
}

void shape_bounding_box(const SensingShape& shape, Point2& lo, Point2& hi) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                lo = {s.center.x - s.radius, s.center.y - s.radius};
                hi = {s.center.x + s.radius, s.center.y + s.radius};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                // loose box from the rotated axis extents
                const double cr = std::cos(s.rotation), sr = std::sin(s.rotation);
                const double ex = std::hypot(s.s1 * cr, s.s2 * sr);
                const double ey = std::hypot(s.s1 * sr, s.s2 * cr);
                lo = {s.center.x - ex, s.center.y - ey};
                hi = {s.center.x + ex, s.center.y + ey};
            } else {
                s.bounding_box(lo, hi);
            }
        },
        shape);
}

} // namespace isacsim
