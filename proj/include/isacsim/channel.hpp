#pragma once

#include <string>

#include "isacsim/geometry.hpp"
#include "isacsim/params.hpp"
#include "isacsim/rng.hpp"

namespace isacsim {

struct RcsSample {
    double sigma_t = 0.0; // m^2, >= 0
};

// Point clutter centered at the target with a fixed RCS.
struct ClutterModel {
    double clutter_rcs = 0.0; // m^2, >= 0
    std::string placement = "point clutter centered at target";
};

/// Monostatic radar-equation echo power at distance d:
///   P * G^2 * lambda^2 * (sigma_t - sigma_c) / ((4pi)^3 * d^(2 alpha)).
/// May be <= 0 when clutter masks the target; returned as-is so the caller
/// can flag it. d = 0 is a singularity and throws.
double received_sensing_power(const RadioNodeParams& node, double d, double sigma_t,
                              double sigma_c, double wavelength);

/// Swerling type-1 RCS draw: exponential with mean mean_rcs (chi-square with
/// 2 degrees of freedom scaled to that mean).
RcsSample sample_rcs(double mean_rcs, RngStream& rng);

/// Equal-power boundary residual W*d_b^(2 alpha_hat) - d_v'^2 for a target,
/// with the BS at the origin. Zero exactly on the boundary, positive where
/// the DRV echo wins. RCS, clutter and wavelength cancel out of the
/// comparison and do not appear. This is the single source of truth for
/// "on the boundary" used by the coverage module.
double equal_rsp_residual(double w, double alpha_hat, Point2 target, Point2 drv_pos);

/// Same, deriving w/alpha_hat from the network parameters. The target must
/// not coincide with the BS origin (the power comparison degenerates there);
/// target == drv_pos is fine and returns W*d_b^(2 alpha_hat).
double equal_rsp_residual(const NetworkParams& net, Point2 target, Point2 drv_pos);

} // namespace isacsim
