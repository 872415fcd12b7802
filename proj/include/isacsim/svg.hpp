#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isacsim/geometry.hpp"

namespace isacsim {

// Minimal static SVG line plot: auto-scaled axes, polylines, point markers.
// One plot per file, no scripting, byte-stable output.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string x_label, std::string y_label);

    void add_polyline(const std::vector<Point2>& pts, const std::string& color,
                      const std::string& name, bool close = false);
    void add_points(const std::vector<Point2>& pts, const std::string& color,
                    const std::string& name);
    /// Vertical error bars, e.g. confidence intervals.
    void add_error_bars(const std::vector<Point2>& centers, const std::vector<double>& half,
                        const std::string& color);

    std::string render(std::uint64_t seed, std::uint64_t config_hash) const;
    void write(const std::string& path, std::uint64_t seed, std::uint64_t config_hash) const;

private:
    struct Series {
        std::vector<Point2> pts;
        std::string color;
        std::string name;
        bool markers = false;
        bool close = false;
    };
    struct Bars {
        std::vector<Point2> centers;
        std::vector<double> half;
        std::string color;
    };

    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
    std::vector<Bars> bars_;
};

} // namespace isacsim
