#include "isacsim/drr.hpp"

#include <algorithm>
#include <cmath>

#include "isacsim/errors.hpp"
#include "isacsim/point_process.hpp"
#include "isacsim/units.hpp"

namespace isacsim {

namespace {

void check_w(double w) {
    if (!(w > 0.0 && w < 1.0))
        throw ModelValidityError("DRR formulas require 0 < W < 1");
}

} // namespace

double ranging_event_probability(double w, double lambda_b, double lambda_v, double area) {
    check_w(w);
    if (!(lambda_b > 0.0 && lambda_v > 0.0))
        throw ModelValidityError("ranging_event_probability: intensities must be > 0");
    if (!(area > 0.0)) throw ModelValidityError("ranging_event_probability: area must be > 0");
    const double p =
        std::sqrt(w) / (1.0 - w) / (2.0 * area * std::sqrt(lambda_b * lambda_v));
    if (p > 1.0)
        throw ModelValidityError(
            "ranging_event_probability exceeds 1: the observation area is too small "
            "for the dilute-regime event model");
    return p;
}

double ranging_repetition_rate(double w, double lambda_b, double lambda_v, double u,
                               double pause_mean) {
    check_w(w);
    if (!(lambda_b > 0.0 && lambda_v > 0.0))
        throw ModelValidityError("ranging_repetition_rate: intensities must be > 0");
    if (!(u > 0.0)) throw ModelValidityError("ranging_repetition_rate: speed must be > 0");
    if (!(pause_mean >= 0.0))
        throw ModelValidityError("ranging_repetition_rate: pause_mean must be >= 0");
    return std::sqrt(w) / (1.0 - w) * lambda_v * u /
           (std::sqrt(lambda_b) + 2.0 * std::sqrt(lambda_b * lambda_v) * u * pause_mean);
}

double dwell_exceed_probability(double w, double lambda_b, double u, double tau) {
    check_w(w);
    if (!(lambda_b > 0.0)) throw ModelValidityError("dwell_exceed_probability: lambda_b must be > 0");
    if (!(u > 0.0)) throw ModelValidityError("dwell_exceed_probability: speed must be > 0");
    if (!(tau >= 0.0)) throw ModelValidityError("dwell_exceed_probability: tau must be >= 0");
    const double one_minus_w = 1.0 - w;
    return std::exp(-4.0 * lambda_b * one_minus_w * one_minus_w * u * u * tau * tau / (kPi * w));
}

double expected_chord(double radius) {
    if (!(radius >= 0.0)) throw ModelValidityError("expected_chord: radius must be >= 0");
    return 0.5 * kPi * radius;
}

DrrAnalytic dynamic_ranging_rate(const NetworkParams& net) {
    const Window win = Window::square_for(std::min(net.bs_intensity, net.drv_intensity));
    return dynamic_ranging_rate(net, win.area());
}

DrrAnalytic dynamic_ranging_rate(const NetworkParams& net, double area) {
    const double w = power_ratio_w(net);
    DrrAnalytic out;
    out.p_r = ranging_event_probability(w, net.bs_intensity, net.drv_intensity, area);
    out.xi_r = ranging_repetition_rate(w, net.bs_intensity, net.drv_intensity, net.speed,
                                       net.pause_mean);
    out.p_dwell = dwell_exceed_probability(w, net.bs_intensity, net.speed, net.pri);
    out.xi = out.xi_r * out.p_dwell;
    return out;
}

} // namespace isacsim
