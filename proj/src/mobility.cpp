#include "isacsim/mobility.hpp"

#include <cmath>

#include "isacsim/errors.hpp"
#include "isacsim/units.hpp"

namespace isacsim {

void validate(const MobilityParams& params) {
    if (!(params.waypoint_intensity > 0.0))
        throw ModelValidityError("mobility: waypoint_intensity must be > 0");
    if (!(params.speed > 0.0)) throw ModelValidityError("mobility: speed must be > 0");
    if (!(params.pause_mean >= 0.0)) throw ModelValidityError("mobility: pause_mean must be >= 0");
}

Transition sample_transition(Point2 current, const MobilityParams& params, RngStream& rng) {
    validate(params);
    const double sigma = 1.0 / std::sqrt(2.0 * kPi * params.waypoint_intensity);
    const double length = rng.rayleigh(sigma);
    const double theta = rng.angle();
    const double pause = rng.exponential(params.pause_mean);

    Transition t;
    t.start = current;
    t.end = {current.x + length * std::cos(theta), current.y + length * std::sin(theta)};
    t.length = length;
    t.duration = length / params.speed;
    t.pause_after = pause;
    return t;
}

double expected_period(const MobilityParams& params) {
    validate(params);
    return params.pause_mean + 1.0 / (2.0 * params.speed * std::sqrt(params.waypoint_intensity));
}

Trajectory build_trajectory(Point2 start, double duration, const MobilityParams& params,
                            RngStream& rng) {
    if (!(duration > 0.0)) throw ModelValidityError("build_trajectory: duration must be > 0");
    validate(params);

    Trajectory traj;
    Point2 pos = start;
    double t = 0.0;
    while (t < duration) {
        Transition tr = sample_transition(pos, params, rng);
        const double remaining = duration - t;
        if (tr.duration >= remaining) {
            // cut mid-transition: shorten the segment, drop the pause
            const double frac = remaining / tr.duration;
            tr.end = {tr.start.x + (tr.end.x - tr.start.x) * frac,
                      tr.start.y + (tr.end.y - tr.start.y) * frac};
            tr.length *= frac;
            tr.duration = remaining;
            tr.pause_after = 0.0;
        } else if (tr.duration + tr.pause_after > remaining) {
            tr.pause_after = remaining - tr.duration;
        }
        t += tr.duration + tr.pause_after;
        pos = tr.end;
        traj.transitions.push_back(tr);
    }
    traj.total_time = t;
    return traj;
}

} // namespace isacsim
