#include <doctest.h>

#include <cmath>

#include "isacsim/drr.hpp"
#include "isacsim/errors.hpp"
#include "isacsim/mobility.hpp"
#include "isacsim/point_process.hpp"
#include "isacsim/rng.hpp"
#include "isacsim/units.hpp"

using namespace isacsim;

namespace {

NetworkParams default_net() {
    NetworkParams net;
    net.bs = {dbm_to_watts(46.0), db_to_linear(14.0), 4.0};
    net.drv = {dbm_to_watts(30.0), db_to_linear(5.0), 4.0};
    net.wavelength = 0.1;
    net.mean_rcs = 1.0;
    net.clutter_rcs = 0.0;
    net.bs_intensity = 0.5e-6;
    net.drv_intensity = 1e-6;
    net.speed = 1.4;
    net.pause_mean = 0.5;
    net.pri = 0.05;
    return net;
}

} // namespace

TEST_CASE("event probability scales inversely with area") {
    const double p1 = ranging_event_probability(0.25, 1e-6, 2e-6, 1e8);
    const double p2 = ranging_event_probability(0.25, 1e-6, 2e-6, 2e8);
    CHECK(p1 == doctest::Approx(2.0 * p2).epsilon(1e-15));
}

TEST_CASE("event probability equals the swept-area composition") {
    RngStream rng(42);
    for (int i = 0; i < 300; ++i) {
        const double w = rng.uniform(0.05, 0.7);
        const double lb = std::exp(rng.uniform(-14.0, -10.0));
        const double lv = std::exp(rng.uniform(-14.0, -10.0));
        const double area = std::exp(rng.uniform(16.0, 20.0));
        const double p = ranging_event_probability(w, lb, lv, area);
        const double composed = 2.0 * mean_nearest_distance(lv) * expected_rc(w, lb) / area;
        CHECK(p == doctest::Approx(composed).epsilon(1e-12));
    }
}

TEST_CASE("event probability above one is an error, not a clamp") {
    CHECK_THROWS_AS(ranging_event_probability(0.9, 1e-6, 1e-6, 10.0), ModelValidityError);
    CHECK_THROWS_AS(ranging_event_probability(1.1, 1e-6, 1e-6, 1e8), ModelValidityError);
}

TEST_CASE("repetition rate vanishes with speed") {
    double prev = ranging_repetition_rate(0.25, 1e-6, 2e-6, 1.0, 0.5);
    for (const double u : {0.1, 0.01, 1e-4, 1e-8}) {
        const double cur = ranging_repetition_rate(0.25, 1e-6, 2e-6, u, 0.5);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(prev < 1e-10);
}

TEST_CASE("repetition rate equals events-per-period over period length") {
    // xi_r == lambda_v |A| P_r / E[T]; the area cancels.
    RngStream rng(43);
    for (int i = 0; i < 300; ++i) {
        const double w = rng.uniform(0.05, 0.7);
        const double lb = std::exp(rng.uniform(-14.0, -10.0));
        const double lv = std::exp(rng.uniform(-14.0, -10.0));
        const double u = rng.uniform(0.3, 30.0);
        const double ts = rng.uniform(0.0, 100.0);
        const double area = std::exp(rng.uniform(17.0, 20.0));
        const double xi_r = ranging_repetition_rate(w, lb, lv, u, ts);
        const double composed = lv * area * ranging_event_probability(w, lb, lv, area) /
                                expected_period({lv, u, ts});
        CHECK(xi_r == doctest::Approx(composed).epsilon(1e-12));
    }
}

TEST_CASE("repetition rate at the default deployment") {
    const NetworkParams net = default_net();
    const double w = power_ratio_w(net);
    const double xi_r =
        ranging_repetition_rate(w, net.bs_intensity, net.drv_intensity, net.speed, net.pause_mean);
    CHECK(xi_r == doctest::Approx(8.6530775338064742e-4).epsilon(1e-12));
    CHECK(std::abs(xi_r - 8.65e-4) <= 1e-6);
}

TEST_CASE("dwell probability endpoints and monotonicity") {
    CHECK(dwell_exceed_probability(0.25, 1e-6, 1.4, 0.0) == 1.0);
    double prev = 2.0;
    for (int i = 0; i <= 50; ++i) {
        const double tau = 0.01 + i * (10.0 - 0.01) / 50.0;
        const double p = dwell_exceed_probability(0.25, 1e-6, 1.4, tau);
        CHECK(p < prev);
        prev = p;
    }
    prev = 2.0;
    for (int i = 0; i <= 50; ++i) {
        const double u = 0.5 + i * 40.0 / 50.0;
        const double p = dwell_exceed_probability(0.25, 1e-6, u, 5.0);
        CHECK(p < prev);
        prev = p;
    }
}

TEST_CASE("dwell probability equals the nearest-BS tail at the chord-derived radius") {
    // kappa >= tau iff d_v >= 2 u tau (1-W)/(pi sqrt(W)); the Rayleigh tail
    // exp(-pi lb r^2) at that radius reproduces the closed form.
    RngStream rng(44);
    for (int i = 0; i < 300; ++i) {
        const double w = rng.uniform(0.05, 0.9);
        const double lb = std::exp(rng.uniform(-16.0, -11.0));
        const double u = rng.uniform(0.3, 30.0);
        const double tau = rng.uniform(0.0, 100.0);
        const double r = 2.0 * u * tau * (1.0 - w) / (kPi * std::sqrt(w));
        const double tail = std::exp(-kPi * lb * r * r);
        CHECK(dwell_exceed_probability(w, lb, u, tau) == doctest::Approx(tail).epsilon(1e-12));
    }
}

TEST_CASE("expected chord") {
    CHECK(expected_chord(2.0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(expected_chord(0.0) == 0.0);
}

TEST_CASE("expected chord matches the random-chord Monte Carlo") {
    // uniform random lines hitting a disk: perpendicular offset uniform in
    // [0, R), chord 2 sqrt(R^2 - p^2); the mean is (pi/2) R.
    RngStream rng(45);
    const double radius = 218.82913971466886;
    double sum = 0.0;
    const int n = 1'000'000;
    for (int i = 0; i < n; ++i) {
        const double p = radius * rng.next_double();
        sum += 2.0 * std::sqrt(radius * radius - p * p);
    }
    const double mean = sum / n;
    CHECK(std::abs(mean - expected_chord(radius)) / expected_chord(radius) <= 0.01);
}

TEST_CASE("assembled rate: product identity and tau = 0 reduction") {
    NetworkParams net = default_net();
    net.pri = 0.0;
    // pri = 0 is outside validate()'s range but fine for the analytic bundle
    const DrrAnalytic zero = dynamic_ranging_rate(net);
    CHECK(zero.xi == zero.xi_r);

    RngStream rng(46);
    for (int i = 0; i < 200; ++i) {
        net = default_net();
        net.drv_intensity = std::exp(rng.uniform(-16.0, -11.0));
        net.speed = rng.uniform(0.3, 10.0);
        net.pri = rng.uniform(0.0, 50.0);
        net.pause_mean = rng.uniform(0.0, 10.0);
        const DrrAnalytic d = dynamic_ranging_rate(net);
        CHECK(d.xi == doctest::Approx(d.xi_r * d.p_dwell).epsilon(1e-15));
        CHECK(d.p_r >= 0.0);
        CHECK(d.p_r <= 1.0);
        CHECK(d.p_dwell <= 1.0);
    }
}

TEST_CASE("analytic rate is monotone in drv intensity and in pri") {
    const NetworkParams base = default_net();
    const double w = power_ratio_w(base);
    double prev = -1.0;
    for (int i = 0; i < 100; ++i) {
        const double lv = 0.1e-6 * std::pow(100.0, i / 99.0);
        const double xi =
            ranging_repetition_rate(w, base.bs_intensity, lv, base.speed, base.pause_mean) *
            dwell_exceed_probability(w, base.bs_intensity, base.speed, base.pri);
        CHECK(xi > prev);
        prev = xi;
    }
    prev = 2.0;
    const double xi_r = ranging_repetition_rate(w, base.bs_intensity, base.drv_intensity,
                                                base.speed, base.pause_mean);
    for (int i = 0; i < 100; ++i) {
        const double tau = 0.01 + (0.2 - 0.01) * i / 99.0;
        const double xi = xi_r * dwell_exceed_probability(w, base.bs_intensity, base.speed, tau);
        CHECK(xi < prev);
        prev = xi;
    }
}

TEST_CASE("rate is invariant under a km rescale of all dimensioned inputs") {
    NetworkParams si = default_net();
    NetworkParams km = si;
    km.bs_intensity = si.bs_intensity * 1e6;   // per km^2
    km.drv_intensity = si.drv_intensity * 1e6; // per km^2
    km.speed = si.speed * 1e-3;                // km/s
    km.wavelength = si.wavelength * 1e-3;
    km.mean_rcs = si.mean_rcs * 1e-6;

    const double w_si = power_ratio_w(si);
    const double w_km = power_ratio_w(km);
    const double xi_si =
        ranging_repetition_rate(w_si, si.bs_intensity, si.drv_intensity, si.speed, si.pause_mean) *
        dwell_exceed_probability(w_si, si.bs_intensity, si.speed, si.pri);
    const double xi_km =
        ranging_repetition_rate(w_km, km.bs_intensity, km.drv_intensity, km.speed, km.pause_mean) *
        dwell_exceed_probability(w_km, km.bs_intensity, km.speed, km.pri);
    CHECK(xi_si == doctest::Approx(xi_km).epsilon(1e-12));
}
