#pragma once

#include "isacsim/params.hpp"

namespace isacsim {

// Closed-form dynamic ranging rate bundle. xi = xi_r * p_dwell holds exactly
// by construction.
struct DrrAnalytic {
    double p_r = 0.0;     // ranging-event probability per movement period per DRV
    double xi_r = 0.0;    // ranging repetition rate, events/s
    double p_dwell = 0.0; // P(dwell >= PRI)
    double xi = 0.0;      // dynamic ranging rate, events/s
};

/// P_r = sqrt(W)/(1-W) * 1/(2 |A| sqrt(lambda_b lambda_v)). Values above 1
/// mean the dilute-regime assumption fails for the chosen area and raise an
/// error rather than clamping.
double ranging_event_probability(double w, double lambda_b, double lambda_v, double area);

/// xi_r = sqrt(W)/(1-W) * lambda_v u / (sqrt(lambda_b) + 2 sqrt(lambda_b lambda_v) u E[T_s]).
double ranging_repetition_rate(double w, double lambda_b, double lambda_v, double u,
                               double pause_mean);

/// P(kappa >= tau) = exp(-4 lambda_b (1-W)^2 u^2 tau^2 / (pi W)).
double dwell_exceed_probability(double w, double lambda_b, double u, double tau);

/// Mean chord of a random straight crossing through a disk: (pi/2) * radius.
double expected_chord(double radius);

/// Assembles the full bundle from network parameters. The event probability
/// depends on the observation area; when omitted it defaults to the standard
/// square window for the configured intensities (side 10/sqrt(min intensity)).
DrrAnalytic dynamic_ranging_rate(const NetworkParams& net);
DrrAnalytic dynamic_ranging_rate(const NetworkParams& net, double area);

} // namespace isacsim
