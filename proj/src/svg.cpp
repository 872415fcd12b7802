#include "isacsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "isacsim/errors.hpp"
#include "isacsim/table.hpp"

namespace isacsim {

namespace {

constexpr double kW = 860.0, kH = 620.0;
constexpr double kML = 90.0, kMR = 30.0, kMT = 50.0, kMB = 70.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgPlot::add_polyline(const std::vector<Point2>& pts, const std::string& color,
                           const std::string& name, bool close) {
    series_.push_back(Series{pts, color, name, false, close});
}

void SvgPlot::add_points(const std::vector<Point2>& pts, const std::string& color,
                         const std::string& name) {
    series_.push_back(Series{pts, color, name, true, false});
}

void SvgPlot::add_error_bars(const std::vector<Point2>& centers, const std::vector<double>& half,
                             const std::string& color) {
    bars_.push_back(Bars{centers, half, color});
}

std::string SvgPlot::render(std::uint64_t seed, std::uint64_t config_hash) const {
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    auto grow = [&](Point2 p, double dy = 0.0) {
        xlo = std::min(xlo, p.x);
        xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y - dy);
        yhi = std::max(yhi, p.y + dy);
    };
    for (const auto& s : series_)
        for (const auto& p : s.pts) grow(p);
    for (const auto& b : bars_)
        for (std::size_t i = 0; i < b.centers.size(); ++i) grow(b.centers[i], b.half[i]);
    if (!(xhi > xlo)) { xlo -= 1.0; xhi += 1.0; }
    if (!(yhi > ylo)) { ylo -= 1.0; yhi += 1.0; }
    const double padx = 0.04 * (xhi - xlo), pady = 0.06 * (yhi - ylo);
    xlo -= padx; xhi += padx; ylo -= pady; yhi += pady;

    const double pw = kW - kML - kMR, ph = kH - kMT - kMB;
    auto px = [&](double x) { return kML + (x - xlo) / (xhi - xlo) * pw; };
    auto py = [&](double y) { return kMT + (yhi - y) / (yhi - ylo) * ph; };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kW) + "\" height=\"" +
         fmt(kH) + "\" viewBox=\"0 0 " + fmt(kW) + " " + fmt(kH) + "\">\n";
    s += "<!-- tool_version=" + std::string(kToolVersion) + " seed=" + std::to_string(seed) +
         " config_hash=" + hex64(config_hash) + " -->\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + fmt(kW / 2) + "\" y=\"28\" text-anchor=\"middle\" font-size=\"18\" "
         "font-family=\"sans-serif\">" + title_ + "</text>\n";

    // frame and tick labels
    s += "<rect x=\"" + fmt(kML) + "\" y=\"" + fmt(kMT) + "\" width=\"" + fmt(pw) +
         "\" height=\"" + fmt(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = xlo + (xhi - xlo) * i / 4.0;
        const double fy = ylo + (yhi - ylo) * i / 4.0;
        s += "<text x=\"" + fmt(px(fx)) + "\" y=\"" + fmt(kH - kMB + 22) +
             "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" + fmt(fx) +
             "</text>\n";
        s += "<text x=\"" + fmt(kML - 8) + "\" y=\"" + fmt(py(fy) + 4) +
             "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">" + fmt(fy) +
             "</text>\n";
        s += "<line x1=\"" + fmt(px(fx)) + "\" y1=\"" + fmt(kMT + ph) + "\" x2=\"" + fmt(px(fx)) +
             "\" y2=\"" + fmt(kMT + ph + 5) + "\" stroke=\"black\"/>\n";
        s += "<line x1=\"" + fmt(kML - 5) + "\" y1=\"" + fmt(py(fy)) + "\" x2=\"" + fmt(kML) +
             "\" y2=\"" + fmt(py(fy)) + "\" stroke=\"black\"/>\n";
    }
    s += "<text x=\"" + fmt(kML + pw / 2) + "\" y=\"" + fmt(kH - 18) +
         "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\">" + x_label_ +
         "</text>\n";
    s += "<text x=\"22\" y=\"" + fmt(kMT + ph / 2) +
         "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\" transform=\"rotate(-90 "
         "22 " + fmt(kMT + ph / 2) + ")\">" + y_label_ + "</text>\n";

    for (const auto& b : bars_) {
        for (std::size_t i = 0; i < b.centers.size(); ++i) {
            const double x = px(b.centers[i].x);
            s += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(py(b.centers[i].y - b.half[i])) +
                 "\" x2=\"" + fmt(x) + "\" y2=\"" + fmt(py(b.centers[i].y + b.half[i])) +
                 "\" stroke=\"" + b.color + "\" stroke-width=\"1.2\"/>\n";
        }
    }

    double legend_y = kMT + 16.0;
    for (const auto& sr : series_) {
        if (sr.markers) {
            for (const auto& p : sr.pts)
                s += "<circle cx=\"" + fmt(px(p.x)) + "\" cy=\"" + fmt(py(p.y)) +
                     "\" r=\"3\" fill=\"" + sr.color + "\"/>\n";
        } else if (!sr.pts.empty()) {
            s += "<path d=\"M";
            for (std::size_t i = 0; i < sr.pts.size(); ++i) {
                if (i) s += " L";
                s += fmt(px(sr.pts[i].x)) + " " + fmt(py(sr.pts[i].y));
            }
            if (sr.close) s += " Z";
            s += "\" fill=\"none\" stroke=\"" + sr.color + "\" stroke-width=\"1.5\"/>\n";
        }
        s += "<text x=\"" + fmt(kML + 12) + "\" y=\"" + fmt(legend_y) +
             "\" font-size=\"12\" font-family=\"sans-serif\" fill=\"" + sr.color + "\">" +
             sr.name + "</text>\n";
        legend_y += 16.0;
    }
    s += "</svg>\n";
    return s;
}

void SvgPlot::write(const std::string& path, std::uint64_t seed, std::uint64_t config_hash) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open for writing: " + path);
    f << render(seed, config_hash);
}

} // namespace isacsim
