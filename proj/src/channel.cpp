#include "isacsim/channel.hpp"

#include <cmath>

#include "isacsim/errors.hpp"
#include "isacsim/units.hpp"

namespace isacsim {

double received_sensing_power(const RadioNodeParams& node, double d, double sigma_t,
                              double sigma_c, double wavelength) {
    if (d == 0.0) throw NumericError("received_sensing_power: d = 0 is singular");
    if (!(d > 0.0)) throw NumericError("received_sensing_power: d must be > 0");
    if (!(wavelength > 0.0)) throw NumericError("received_sensing_power: wavelength must be > 0");
    if (sigma_t < 0.0 || sigma_c < 0.0)
        throw NumericError("received_sensing_power: RCS values must be >= 0");
    const double four_pi_cubed = std::pow(4.0 * kPi, 3.0);
    const double g2 = node.antenna_gain * node.antenna_gain;
    return node.tx_power * g2 * wavelength * wavelength * (sigma_t - sigma_c) /
           (four_pi_cubed * std::pow(d, 2.0 * node.path_loss_exponent));
}

RcsSample sample_rcs(double mean_rcs, RngStream& rng) {
    if (!(mean_rcs > 0.0)) throw ModelValidityError("sample_rcs: mean RCS must be > 0");
    return RcsSample{rng.exponential(mean_rcs)};
}

double equal_rsp_residual(double w, double alpha_hat, Point2 target, Point2 drv_pos) {
    const double db2 = dot(target, target);
    if (db2 == 0.0)
        throw NumericError("equal_rsp_residual: target coincides with the BS origin");
    const Point2 dv = target - drv_pos;
    return w * std::pow(db2, alpha_hat) - dot(dv, dv);
}

double equal_rsp_residual(const NetworkParams& net, Point2 target, Point2 drv_pos) {
    const DerivedParams dp = derive_params(net, 1.0);
    return equal_rsp_residual(dp.w, dp.alpha_hat, target, drv_pos);
}

} // namespace isacsim
