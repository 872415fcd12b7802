#pragma once

#include <vector>

#include "isacsim/geometry.hpp"
#include "isacsim/rng.hpp"

namespace isacsim {

struct MobilityParams {
    double waypoint_intensity = 0.0; // per m^2 (lambda_v)
    double speed = 0.0;              // m/s (u)
    double pause_mean = 0.0;         // s (E[T_s])
};

// One movement period: a straight transition between successive waypoints
// followed by a pause.
struct Transition {
    Point2 start;
    Point2 end;
    double length = 0.0;      // m, |end - start|
    double duration = 0.0;    // s, length / u
    double pause_after = 0.0; // s
};

struct Trajectory {
    std::vector<Transition> transitions;
    double total_time = 0.0; // sum of durations and pauses
};

/// Transition lengths are Rayleigh with scale 1/sqrt(2 pi lambda_v), chosen
/// so the mean is 1/(2 sqrt(lambda_v)); directions are uniform; pauses are
/// exponential with mean pause_mean (a modeling choice, only the mean is
/// prescribed).
Transition sample_transition(Point2 current, const MobilityParams& params, RngStream& rng);

/// E[T] = E[T_s] + 1/(2 u sqrt(lambda_v)).
double expected_period(const MobilityParams& params);

/// Concatenates sampled transitions until total_time reaches the requested
/// duration; the final segment or pause is truncated so total_time matches
/// exactly.
Trajectory build_trajectory(Point2 start, double duration, const MobilityParams& params,
                            RngStream& rng);

void validate(const MobilityParams& params);

} // namespace isacsim
