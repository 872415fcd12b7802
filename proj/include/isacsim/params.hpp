#pragma once

namespace isacsim {

// Per-node radio parameters of the sensing link budget. The transmit and
// receive gains are equal in a monostatic setup, so a single gain G is kept.
struct RadioNodeParams {
    double tx_power = 0.0;           // watts, > 0
    double antenna_gain = 0.0;       // linear ratio, > 0
    double path_loss_exponent = 0.0; // dimensionless, in (2, 6)
};

// Full network description in SI units. "bs" is the static high-power layer,
// "drv" the mobile low-power layer.
struct NetworkParams {
    RadioNodeParams bs;
    RadioNodeParams drv;
    double wavelength = 0.0;    // m
    double mean_rcs = 0.0;      // m^2, average target RCS
    double clutter_rcs = 0.0;   // m^2
    double bs_intensity = 0.0;  // per m^2
    double drv_intensity = 0.0; // per m^2
    double speed = 0.0;         // m/s, DRV velocity u
    double pause_mean = 0.0;    // s, mean waypoint pause
    double pri = 0.0;           // s, pulse repetition interval tau
};

// Quantities derived from the power budget:
//   w         = (P_v G_v^2 / (P_b G_b^2))^(1/alpha_v), must be < 1
//   alpha_hat = alpha_b / alpha_v, in (0, 1]
//   beta      = d_v^(2(alpha_hat-1)), the linearization scale for a given
//               BS-DRV distance (1 when alpha_hat = 1, any d_v)
struct DerivedParams {
    double w = 0.0;
    double alpha_hat = 0.0;
    double beta = 0.0;
};

/// Throws ModelValidityError/NumericError when an invariant is violated.
void validate(const RadioNodeParams& node);
void validate(const NetworkParams& net);

DerivedParams derive_params(const NetworkParams& net, double d_v);

/// The W ratio alone (no beta), for callers that have no distance yet.
double power_ratio_w(const NetworkParams& net);

} // namespace isacsim
