#pragma once

#include <optional>

#include "isacsim/geometry.hpp"

namespace isacsim {

// General conic a x^2 + 2b xy + c y^2 + 2d x + 2f y + g = 0, together with
// the translated constant h (the value the quadratic form takes against the
// center offset) and the eigenvalues of [[a, b], [b, c]].
struct ConicCoefficients {
    double a = 0, b = 0, c = 0, d = 0, f = 0, g = 0;
    Point2 center;              // (x_e, y_e)
    double h = 0;               // g - a x_e^2 - 2b x_e y_e - c y_e^2
    double lambda_min = 0;
    double lambda_max = 0;
};

enum class ConicMode {
    kExpansion, // full algebraic expansion of the quadratic Taylor polynomial
    kPublished, // the published coefficient list, kept verbatim for comparison
};

struct CoverageResult {
    BoundaryPolyline exact;
    SensingShape approx;
    double iou = 0.0;
    double max_boundary_residual = 0.0;
};

/// Pairs an exact contour with an approximate shape and its quality scores.
CoverageResult make_coverage_result(BoundaryPolyline exact, SensingShape approx, double w,
                                    double alpha_hat, double d_v);

/// Equal-power boundary traced radially around the DRV at (d_v, 0): for each
/// angle the first root of W*((d_v + r cos)^2 + (r sin)^2)^alpha_hat - r^2,
/// found by bracketed bisection to |dr| <= 1e-9 * d_v. The lower half plane
/// is mirrored from the upper half, so the polyline is symmetric about the
/// x-axis by construction.
BoundaryPolyline exact_boundary(double w, double alpha_hat, double d_v, int n_angles);

/// beta = d_v^(2(alpha_hat - 1)).
double mmse_beta(double alpha_hat, double d_v);

/// Independent re-derivation of beta: argmin over beta > 0 of
/// integral_0^d_v |r^(2 alpha_hat) - beta r^2| dr, golden-section search on
/// a 10^4-point trapezoid quadrature, 1e-6 relative tolerance.
double numeric_beta(double alpha_hat, double d_v, int quadrature_points = 10000);

/// Equal-power circle: center (d_v/(1 - beta W), 0), radius
/// sqrt(beta W) d_v / (1 - beta W). Exact for alpha_hat = 1, beta = 1.
Circle circle_approximation(double w, double beta, double d_v);

/// Second-order conic model of the boundary, expanded about
/// expansion_point (default: the DRV position). See ConicMode.
ConicCoefficients taylor_conic(double w, double alpha_hat, double d_v,
                               Point2 expansion_point, ConicMode mode);

Ellipse conic_to_ellipse(const ConicCoefficients& coeffs);

struct ApproximationQuality {
    double iou = 0.0;
    double max_residual = 0.0; // max |equal-power residual| / d_v^2 on the approx boundary
};

/// Grid-sampled intersection-over-union (default 512x512 over the joint
/// bounding box) plus the worst normalized boundary residual of the
/// approximate shape.
ApproximationQuality approximation_quality(const BoundaryPolyline& exact,
                                           const SensingShape& approx, double w,
                                           double alpha_hat, double d_v,
                                           int grid = 512);

} // namespace isacsim
