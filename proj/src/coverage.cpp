#include "isacsim/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "isacsim/channel.hpp"
#include "isacsim/errors.hpp"
#include "isacsim/units.hpp"

namespace isacsim {

namespace {

// Boundary residual along a ray from the DRV: r = 0 gives +W*d_v^(2a) > 0 and
// large r is dominated by -r^2, so the first sign change brackets the crossing.
double ray_residual(double w, double alpha_hat, double d_v, double cos_t, double sin_t, double r) {
    const double x = d_v + r * cos_t;
    const double y = r * sin_t;
    return w * std::pow(x * x + y * y, alpha_hat) - r * r;
}

double solve_ray(double w, double alpha_hat, double d_v, double theta) {
    const double cos_t = std::cos(theta);
    const double sin_t = std::sin(theta);
    double lo = 0.0;
    double hi = 1e-6 * d_v;
    while (ray_residual(w, alpha_hat, d_v, cos_t, sin_t, hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 10.0 * d_v)
            throw NumericError("exact_boundary: no sign change within 10*d_v; "
                               "model assumption (W < 1, alpha_hat <= 1) violated");
    }
    const double tol = 1e-9 * d_v;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (ray_residual(w, alpha_hat, d_v, cos_t, sin_t, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

BoundaryPolyline exact_boundary(double w, double alpha_hat, double d_v, int n_angles) {
    if (!(w > 0.0 && w < 1.0)) throw ModelValidityError("exact_boundary: W must lie in (0, 1)");
    if (!(alpha_hat > 0.0 && alpha_hat <= 1.0))
        throw ModelValidityError("exact_boundary: alpha_hat must lie in (0, 1]");
    if (!(d_v > 0.0)) throw ModelValidityError("exact_boundary: d_v must be > 0");
    if (n_angles < 16) throw NumericError("exact_boundary: n_angles must be >= 16");

    std::vector<Point2> pts(static_cast<std::size_t>(n_angles));
    const int half = n_angles / 2;
    for (int k = 0; k <= half; ++k) {
        const double theta = 2.0 * kPi * k / n_angles;
        const double r = solve_ray(w, alpha_hat, d_v, theta);
        pts[static_cast<std::size_t>(k)] = {d_v + r * std::cos(theta), r * std::sin(theta)};
    }
    // Mirror the lower half so the polyline is exactly symmetric in y.
    for (int k = half + 1; k < n_angles; ++k) {
        const Point2 src = pts[static_cast<std::size_t>(n_angles - k)];
        pts[static_cast<std::size_t>(k)] = {src.x, -src.y};
    }
    return BoundaryPolyline(std::move(pts));
}

double mmse_beta(double alpha_hat, double d_v) {
    if (!(d_v > 0.0)) throw ModelValidityError("mmse_beta: d_v must be > 0");
    if (alpha_hat == 1.0) return 1.0;
    return std::pow(d_v, 2.0 * (alpha_hat - 1.0));
}

double numeric_beta(double alpha_hat, double d_v, int quadrature_points) {
    if (!(d_v > 0.0)) throw ModelValidityError("numeric_beta: d_v must be > 0");
    if (quadrature_points < 64) throw NumericError("numeric_beta: too few quadrature points");

    const int n = quadrature_points;
    std::vector<double> r(static_cast<std::size_t>(n) + 1), g(r.size()), r2(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = d_v * static_cast<double>(i) / n;
        g[i] = std::pow(r[i], 2.0 * alpha_hat);
        r2[i] = r[i] * r[i];
    }
    const double hstep = d_v / n;
    auto objective = [&](double beta) {
        double acc = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double v = std::abs(g[i] - beta * r2[i]);
            acc += (i == 0 || i + 1 == r.size()) ? 0.5 * v : v;
        }
        return acc * hstep;
    };

    // The objective is convex in beta (integral of |affine in beta|), so
    // golden-section converges to the global minimum.
    double a = 1e-12;
    double b = std::max(4.0, 4.0 * std::pow(d_v, 2.0 * (alpha_hat - 1.0)));
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = objective(c), fd = objective(d);
    while (b - a > 1e-6 * std::max(1.0, std::abs(a))) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = objective(d);
        }
    }
    return 0.5 * (a + b);
}

Circle circle_approximation(double w, double beta, double d_v) {
    if (!(d_v >= 0.0)) throw ModelValidityError("circle_approximation: d_v must be >= 0");
    const double bw = beta * w;
    if (!(bw > 0.0)) throw ModelValidityError("circle_approximation: beta*W must be > 0");
    if (bw >= 1.0)
        throw NumericError("circle_approximation: beta*W >= 1, circle center diverges");
    return Circle{{d_v / (1.0 - bw), 0.0}, std::sqrt(bw) * d_v / (1.0 - bw)};
}

ConicCoefficients taylor_conic(double w, double alpha_hat, double d_v, Point2 expansion_point,
                               ConicMode mode) {
    if (!(alpha_hat > 0.0 && alpha_hat < 1.0))
        throw ModelValidityError("taylor_conic: alpha_hat must lie in (0, 1)");
    const double i = expansion_point.x;
    const double j = expansion_point.y;
    const double q = i * i + j * j;
    if (q == 0.0) throw ModelValidityError("taylor_conic: expansion point must not be the BS origin");

    const double qa = std::pow(q, alpha_hat);
    const double qa1 = std::pow(q, alpha_hat - 1.0);
    const double qa2 = std::pow(q, alpha_hat - 2.0);
    const double ah = alpha_hat;

    ConicCoefficients co;
    if (mode == ConicMode::kPublished) {
        co.a = w * ah * qa1 + w * ah * (ah - 1.0) * 2.0 * i * i * qa2 - 1.0;
        co.b = w * ah * (ah - 1.0) * i * j * qa2;
        co.c = w * ah * qa1 + w * ah * (ah - 1.0) * 2.0 * j * j * qa2 - 1.0;
        co.d = w * ah * i * qa1 + d_v;
        co.f = w * ah * j * qa1;
        co.g = w * qa - d_v * d_v;
    } else {
        // Quadratic Taylor polynomial of (x^2+y^2)^ah about (i, j), expanded
        // into the equal-power equation and collected per monomial. The
        // first-order pieces of d, f and most of g cancel against the
        // expansion-point offsets, leaving only (ah - 1)-weighted terms;
        // at alpha_hat -> 1 the conic reduces exactly to the equal-power
        // circle (a = c = W - 1, d = d_v, g = -d_v^2).
        co.a = w * ah * qa1 + 2.0 * w * ah * (ah - 1.0) * i * i * qa2 - 1.0;
        co.b = 2.0 * w * ah * (ah - 1.0) * i * j * qa2;
        co.c = w * ah * qa1 + 2.0 * w * ah * (ah - 1.0) * j * j * qa2 - 1.0;
        co.d = -2.0 * w * ah * (ah - 1.0) * i * qa1 + d_v;
        co.f = -2.0 * w * ah * (ah - 1.0) * j * qa1;
        co.g = w * qa * (1.0 - ah) * (1.0 - 2.0 * ah) - d_v * d_v;
    }

    const double det = co.b * co.b - co.a * co.c;
    if (det >= 0.0)
        throw NumericError("taylor_conic: b^2 - ac >= 0, conic is not an ellipse");
    co.center = {(co.c * co.d - co.b * co.f) / det, (co.a * co.f - co.b * co.d) / det};
    co.h = co.g - co.a * co.center.x * co.center.x - 2.0 * co.b * co.center.x * co.center.y -
           co.c * co.center.y * co.center.y;
    const double root = std::sqrt((co.a - co.c) * (co.a - co.c) + 4.0 * co.b * co.b);
    co.lambda_min = 0.5 * ((co.a + co.c) - root);
    co.lambda_max = 0.5 * ((co.a + co.c) + root);
    return co;
}

Ellipse conic_to_ellipse(const ConicCoefficients& coeffs) {
    double a = coeffs.a, b = coeffs.b, c = coeffs.c, d = coeffs.d, f = coeffs.f, g = coeffs.g;
    if (!(b * b - a * c < 0.0))
        throw NumericError("conic_to_ellipse: b^2 - ac >= 0, not an ellipse");

    const double det = b * b - a * c;
    const Point2 center{(c * d - b * f) / det, (a * f - b * d) / det};

    // Normalize the overall sign so the quadratic form is positive definite;
    // the translated constant h is then negative and the semi-axes are
    // sqrt(-h/lambda) with both radicands positive.
    if (a + c < 0.0) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
        f = -f;
        g = -g;
    }
    const double h =
        g - a * center.x * center.x - 2.0 * b * center.x * center.y - c * center.y * center.y;
    const double root = std::sqrt((a - c) * (a - c) + 4.0 * b * b);
    const double lambda_max = 0.5 * ((a + c) + root);
    const double lambda_min = 0.5 * ((a + c) - root);
    if (!(lambda_min > 0.0))
        throw NumericError("conic_to_ellipse: quadratic form is not definite");
    if (!(-h / lambda_min > 0.0) || !(-h / lambda_max > 0.0))
        throw NumericError("conic_to_ellipse: degenerate conic, non-positive semi-axis radicand");

    Ellipse e;
    e.center = center;
    e.s1 = std::sqrt(-h / lambda_max);
    e.s2 = std::sqrt(-h / lambda_min);

    // Orientation of the s1 axis = eigenvector of lambda_max, mapped to [0, pi).
    double rot;
    if (b == 0.0) {
        rot = (a >= c) ? 0.0 : 0.5 * kPi;
    } else {
        rot = std::atan2(lambda_max - a, b);
    }
    rot = std::fmod(rot, kPi);
    if (rot < 0.0) rot += kPi;
    if (rot == kPi) rot = 0.0;
    e.rotation = rot;
    return e;
}

namespace {

// Scanline rasterization of a closed polyline: per grid row, the sorted x
// crossings of the boundary; interior cells found by pairing crossings.
class PolylineRaster {
public:
    PolylineRaster(const BoundaryPolyline& poly, double y0, double dy, int rows) {
        rows_.resize(static_cast<std::size_t>(rows));
        const auto& pts = poly.points();
        const std::size_t n = pts.size();
        for (int row = 0; row < rows; ++row) {
            const double y = y0 + (row + 0.5) * dy;
            auto& xs = rows_[static_cast<std::size_t>(row)];
            for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
                const Point2& pi = pts[i];
                const Point2& pj = pts[j];
                if ((pi.y > y) != (pj.y > y))
                    xs.push_back((pj.x - pi.x) * (y - pi.y) / (pj.y - pi.y) + pi.x);
            }
            std::sort(xs.begin(), xs.end());
        }
    }

    bool inside(int row, double x) const {
        const auto& xs = rows_[static_cast<std::size_t>(row)];
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        return (std::distance(xs.begin(), it) % 2) == 1;
    }

private:
    std::vector<std::vector<double>> rows_;
};

} // namespace

CoverageResult make_coverage_result(BoundaryPolyline exact, SensingShape approx, double w,
                                    double alpha_hat, double d_v) {
    const ApproximationQuality q = approximation_quality(exact, approx, w, alpha_hat, d_v);
    return CoverageResult{std::move(exact), std::move(approx), q.iou, q.max_residual};
}

ApproximationQuality approximation_quality(const BoundaryPolyline& exact,
                                           const SensingShape& approx, double w,
                                           double alpha_hat, double d_v, int grid) {
    if (grid < 8) throw NumericError("approximation_quality: grid too small");
    Point2 lo1, hi1, lo2, hi2;
    exact.bounding_box(lo1, hi1);
    shape_bounding_box(approx, lo2, hi2);
    const Point2 lo{std::min(lo1.x, lo2.x), std::min(lo1.y, lo2.y)};
    const Point2 hi{std::max(hi1.x, hi2.x), std::max(hi1.y, hi2.y)};
    if (!(hi.x > lo.x) || !(hi.y > lo.y))
        throw NumericError("approximation_quality: empty joint bounding box");

    const double dx = (hi.x - lo.x) / grid;
    const double dy = (hi.y - lo.y) / grid;
    PolylineRaster raster(exact, lo.y, dy, grid);

    std::uint64_t inter = 0, uni = 0;
    for (int row = 0; row < grid; ++row) {
        const double y = lo.y + (row + 0.5) * dy;
        for (int col = 0; col < grid; ++col) {
            const double x = lo.x + (col + 0.5) * dx;
            const bool in_exact = raster.inside(row, x);
            const bool in_approx = shape_contains(approx, {x, y});
            inter += (in_exact && in_approx) ? 1 : 0;
            uni += (in_exact || in_approx) ? 1 : 0;
        }
    }
    ApproximationQuality q;
    q.iou = (uni == 0) ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);

    // Worst equal-power residual along the approximate boundary, in units of d_v^2.
    const int samples = 720;
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * kPi * k / samples;
        Point2 p;
        if (const Circle* c = std::get_if<Circle>(&approx)) {
            p = circle_point(*c, theta);
        } else if (const Ellipse* e = std::get_if<Ellipse>(&approx)) {
            p = ellipse_point(*e, theta);
        } else {
            const auto& pl = std::get<BoundaryPolyline>(approx).points();
            p = pl[static_cast<std::size_t>(k) % pl.size()];
        }
        if (p.x == 0.0 && p.y == 0.0) continue;
        worst = std::max(worst,
                         std::abs(equal_rsp_residual(w, alpha_hat, p, Point2{d_v, 0.0})));
    }
    q.max_residual = worst / (d_v * d_v);
    return q;
}

} // namespace isacsim
