#pragma once

#include <variant>
#include <vector>

namespace isacsim {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
double norm(Point2 p);
double dot(Point2 a, Point2 b);
double distance(Point2 a, Point2 b);

struct Circle {
    Point2 center;
    double radius = 0.0; // >= 0
};

// Rotation is the angle of the s1 axis, in [0, pi). s1 <= s2, so the major
// axis lies at rotation + pi/2.
struct Ellipse {
    Point2 center;
    double s1 = 0.0;
    double s2 = 0.0;
    double rotation = 0.0;
};

/// Point on the ellipse boundary at parameter theta in [0, 2pi).
Point2 ellipse_point(const Ellipse& e, double theta);
Point2 circle_point(const Circle& c, double theta);

// Closed, implicitly-cyclic vertex list (last vertex connects back to the
// first). Construction requires >= 3 finite vertices.
class BoundaryPolyline {
public:
    explicit BoundaryPolyline(std::vector<Point2> points);

    const std::vector<Point2>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    double area() const; // shoelace, orientation independent
    bool contains(Point2 p) const; // even-odd rule, boundary inclusive
    /// O(n^2) simplicity check, used by tests on small polylines.
    bool is_simple() const;
    void bounding_box(Point2& lo, Point2& hi) const;

private:
    std::vector<Point2> points_;
};

using SensingShape = std::variant<Circle, Ellipse, BoundaryPolyline>;

double shape_area(const SensingShape& shape);
bool shape_contains(const SensingShape& shape, Point2 p);
void shape_bounding_box(const SensingShape& shape, Point2& lo, Point2& hi);

} // namespace isacsim
