#include "isacsim/params.hpp"

#include <cmath>
#include <string>

#include "isacsim/errors.hpp"

namespace isacsim {

void validate(const RadioNodeParams& node) {
    if (!(node.tx_power > 0.0))
        throw ModelValidityError("tx_power must be > 0");
    if (!(node.antenna_gain > 0.0))
        throw ModelValidityError("antenna_gain must be > 0");
    if (!(node.path_loss_exponent > 2.0 && node.path_loss_exponent < 6.0))
        throw ModelValidityError("path_loss_exponent must lie in (2, 6), got " +
                                 std::to_string(node.path_loss_exponent));
}

void validate(const NetworkParams& net) {
    validate(net.bs);
    validate(net.drv);
    if (!(net.wavelength > 0.0)) throw ModelValidityError("wavelength must be > 0");
    if (!(net.mean_rcs > 0.0)) throw ModelValidityError("mean_rcs must be > 0");
    if (!(net.clutter_rcs >= 0.0)) throw ModelValidityError("clutter_rcs must be >= 0");
    if (!(net.bs_intensity > 0.0)) throw ModelValidityError("bs_intensity must be > 0");
    if (!(net.drv_intensity > 0.0)) throw ModelValidityError("drv_intensity must be > 0");
    if (!(net.speed > 0.0)) throw ModelValidityError("speed must be > 0");
    if (!(net.pause_mean >= 0.0)) throw ModelValidityError("pause_mean must be >= 0");
    if (!(net.pri > 0.0)) throw ModelValidityError("pri must be > 0");
    derive_params(net, 1.0); // triggers the W/alpha_hat validity checks
}

double power_ratio_w(const NetworkParams& net) {
    const double num = net.drv.tx_power * net.drv.antenna_gain * net.drv.antenna_gain;
    const double den = net.bs.tx_power * net.bs.antenna_gain * net.bs.antenna_gain;
    const double w = std::pow(num / den, 1.0 / net.drv.path_loss_exponent);
    if (!(w > 0.0) || !std::isfinite(w))
        throw NumericError("power ratio W is not a positive finite number");
    if (w >= 1.0)
        throw ModelValidityError(
            "DRV dominates BS: W = " + std::to_string(w) +
            " >= 1; the equal-power coverage model requires the BS budget to dominate");
    return w;
}

DerivedParams derive_params(const NetworkParams& net, double d_v) {
    if (!(d_v >= 0.0)) throw ModelValidityError("d_v must be >= 0");
    DerivedParams out;
    out.w = power_ratio_w(net);
    out.alpha_hat = net.bs.path_loss_exponent / net.drv.path_loss_exponent;
    if (!(out.alpha_hat > 0.0 && out.alpha_hat <= 1.0))
        throw ModelValidityError("alpha_hat = alpha_b/alpha_v must lie in (0, 1], got " +
                                 std::to_string(out.alpha_hat));
    if (out.alpha_hat == 1.0) {
        out.beta = 1.0; // any d_v, including 0
    } else {
        if (d_v == 0.0)
            throw NumericError("beta is undefined at d_v = 0 for alpha_hat < 1");
        out.beta = std::pow(d_v, 2.0 * (out.alpha_hat - 1.0));
    }
    return out;
}

} // namespace isacsim
