#include "isacsim/point_process.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isacsim/errors.hpp"

namespace isacsim {

Point2 Window::delta(Point2 a, Point2 b) const {
    Point2 d{b.x - a.x, b.y - a.y};
    if (wrap) {
        d.x -= width * std::round(d.x / width);
        d.y -= height * std::round(d.y / height);
    }
    return d;
}

double Window::distance(Point2 a, Point2 b) const {
    const Point2 d = delta(a, b);
    return std::hypot(d.x, d.y);
}

Point2 Window::wrap_point(Point2 p) const {
    if (!wrap) return p;
    double x = std::fmod(p.x, width);
    double y = std::fmod(p.y, height);
    if (x < 0.0) x += width;
    if (y < 0.0) y += height;
    return {x, y};
}

Window Window::square_for(double min_intensity) {
    if (!(min_intensity > 0.0))
        throw ModelValidityError("Window::square_for: intensity must be > 0");
    const double side = 10.0 / std::sqrt(min_intensity);
    return Window{side, side, true};
}

PointPattern sample_ppp(double intensity, const Window& window, RngStream& rng) {
    if (!(intensity >= 0.0)) throw ModelValidityError("sample_ppp: intensity must be >= 0");
    if (!(window.width > 0.0 && window.height > 0.0))
        throw ModelValidityError("sample_ppp: window must have positive area");
    PointPattern pat;
    pat.intensity = intensity;
    pat.window = window;
    const std::uint64_t n = rng.poisson(intensity * window.area());
    pat.points.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double x = window.width * rng.next_double();
        const double y = window.height * rng.next_double();
        pat.points.push_back({x, y});
    }
    return pat;
}

double nearest_distance(Point2 origin, const PointPattern& pattern) {
    if (pattern.points.empty())
        throw NumericError("nearest_distance: empty point pattern");
    double best = std::numeric_limits<double>::infinity();
    for (const Point2& p : pattern.points)
        best = std::min(best, pattern.window.distance(origin, p));
    return best;
}

double mean_nearest_distance(double intensity) {
    if (!(intensity > 0.0))
        throw ModelValidityError("mean_nearest_distance: intensity must be > 0");
    return 1.0 / (2.0 * std::sqrt(intensity));
}

double expected_rc(double w, double lambda_b) {
    if (!(w > 0.0 && w < 1.0)) throw ModelValidityError("expected_rc: W must lie in (0, 1)");
    return std::sqrt(w) * mean_nearest_distance(lambda_b) / (1.0 - w);
}

NearestNeighborGrid::NearestNeighborGrid(const std::vector<Point2>& points, const Window& window)
    : n_points_(points.size()), window_(window) {
    const int target = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(points.size()))));
    nx_ = std::clamp(target, 1, 1024);
    ny_ = nx_;
    cw_ = window.width / nx_;
    ch_ = window.height / ny_;
    cells_.resize(static_cast<std::size_t>(nx_) * ny_);
    for (const Point2& p : points) {
        const Point2 q = window.wrap_point(p);
        int cx = std::min(static_cast<int>(q.x / cw_), nx_ - 1);
        int cy = std::min(static_cast<int>(q.y / ch_), ny_ - 1);
        cells_[static_cast<std::size_t>(cy) * nx_ + cx].push_back(q);
    }
}

NearestNeighborGrid::Result NearestNeighborGrid::nearest(Point2 query) const {
    if (n_points_ == 0) throw NumericError("NearestNeighborGrid: empty point set");
    const Point2 q = window_.wrap_point(query);
    const int qx = std::min(static_cast<int>(q.x / cw_), nx_ - 1);
    const int qy = std::min(static_cast<int>(q.y / ch_), ny_ - 1);

    double best = std::numeric_limits<double>::infinity();
    Point2 best_delta{0.0, 0.0};
    const int max_ring = std::max(nx_, ny_); // full sweep fallback

    for (int ring = 0; ring <= max_ring; ++ring) {
        // Once a candidate is known, stop when the ring cannot beat it:
        // cells at ring k are at least (k-1)*min(cw,ch) away.
        if (best < std::numeric_limits<double>::infinity() &&
            (ring - 1) * std::min(cw_, ch_) > best)
            break;
        for (int dy = -ring; dy <= ring; ++dy) {
            for (int dx = -ring; dx <= ring; ++dx) {
                if (std::max(std::abs(dx), std::abs(dy)) != ring) continue; // ring shell only
                int cx = qx + dx, cy = qy + dy;
                if (window_.wrap) {
                    cx = ((cx % nx_) + nx_) % nx_;
                    cy = ((cy % ny_) + ny_) % ny_;
                } else if (cx < 0 || cy < 0 || cx >= nx_ || cy >= ny_) {
                    continue;
                }
                for (const Point2& p : cells_[static_cast<std::size_t>(cy) * nx_ + cx]) {
                    const Point2 d = window_.delta(q, p);
                    const double dist = std::hypot(d.x, d.y);
                    if (dist < best) {
                        best = dist;
                        best_delta = d;
                    }
                }
            }
        }
        // On a torus, visiting more than the full grid is meaningless.
        if (ring >= max_ring) break;
    }
    return {best, best_delta};
}

} // namespace isacsim
