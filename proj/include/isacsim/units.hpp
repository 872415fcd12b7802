#pragma once

#include <cmath>
#include <limits>

// Unit helpers. Everything inside the library is strict SI: meters, seconds,
// watts, per-m^2. dBm/dBi/per-km^2 are converted once, at the configuration
// boundary, and never appear past it.

namespace isacsim {

inline constexpr double kPi = 3.14159265358979323846;

/// 10^(value_db/10). Works for dB, dBi and (with a mW base) dBm.
inline double db_to_linear(double value_db) {
    return std::pow(10.0, value_db / 10.0);
}

inline double linear_to_db(double ratio) {
    return 10.0 * std::log10(ratio);
}

/// dBm -> watts.
inline double dbm_to_watts(double value_dbm) {
    return db_to_linear(value_dbm) * 1e-3;
}

inline double per_km2_to_per_m2(double v) { return v * 1e-6; }
inline double km_to_m(double v) { return v * 1e3; }

} // namespace isacsim
