#pragma once

#include <cstdint>
#include <vector>

#include "isacsim/geometry.hpp"
#include "isacsim/rng.hpp"

namespace isacsim {

// Axis-aligned sampling window. With wrap = true distances use the toroidal
// (minimum-image) metric, which removes edge bias in Monte-Carlo runs.
struct Window {
    double width = 0.0;
    double height = 0.0;
    bool wrap = true;

    double area() const { return width * height; }

    /// Minimum-image displacement from a to b.
    Point2 delta(Point2 a, Point2 b) const;
    double distance(Point2 a, Point2 b) const;
    Point2 wrap_point(Point2 p) const;

    /// Square window with side 10/sqrt(intensity), large enough that
    /// wrap-around corrections to the nearest-distance law are negligible.
    static Window square_for(double min_intensity);
};

struct PointPattern {
    std::vector<Point2> points;
    double intensity = 0.0; // per m^2
    Window window;
};

/// Homogeneous PPP: Poisson(intensity * area) points, i.i.d. uniform.
PointPattern sample_ppp(double intensity, const Window& window, RngStream& rng);

/// Distance from origin to the nearest pattern point (toroidal if the
/// window wraps). Throws on an empty pattern.
double nearest_distance(Point2 origin, const PointPattern& pattern);

/// Mean nearest-neighbor distance of a PPP: 1/(2 sqrt(intensity)).
double mean_nearest_distance(double intensity);

/// E[R_c] = sqrt(W)/(1-W) * 1/(2 sqrt(lambda_b)): the equal-power radius
/// averaged over the Rayleigh nearest-BS distance.
double expected_rc(double w, double lambda_b);

// Uniform-grid nearest-neighbor index over a fixed point set; queries return
// the exact minimum (expanding ring search), so results never depend on
// construction or traversal order.
class NearestNeighborGrid {
public:
    NearestNeighborGrid(const std::vector<Point2>& points, const Window& window);

    struct Result {
        double distance;
        Point2 delta; // minimum-image vector from the query to the nearest point
    };
    Result nearest(Point2 query) const;

    bool empty() const { return n_points_ == 0; }

private:
    std::vector<std::vector<Point2>> cells_;
    std::size_t n_points_ = 0;
    int nx_ = 0, ny_ = 0;
    double cw_ = 0.0, ch_ = 0.0;
    Window window_;
};

} // namespace isacsim
