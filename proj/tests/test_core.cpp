#include <doctest.h>

#include <cmath>

#include "isacsim/errors.hpp"
#include "isacsim/geometry.hpp"
#include "isacsim/params.hpp"
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

TEST_CASE("db conversion basics") {
    CHECK(db_to_linear(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
    // 46 dBm in milliwatts: 10^4.6
    CHECK(db_to_linear(46.0) == doctest::Approx(39810.717055349691).epsilon(1e-13));
    CHECK(dbm_to_watts(46.0) == doctest::Approx(39.810717055349691).epsilon(1e-13));
}

TEST_CASE("db round trip over [-100, 100]") {
    RngStream rng(42);
    for (int i = 0; i < 2000; ++i) {
        const double x = rng.uniform(-100.0, 100.0);
        CHECK(linear_to_db(db_to_linear(x)) == doctest::Approx(x).epsilon(1e-12));
    }
    CHECK(linear_to_db(db_to_linear(-100.0)) == doctest::Approx(-100.0).epsilon(1e-12));
    CHECK(linear_to_db(db_to_linear(100.0)) == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("derive_params rejects equal budgets") {
    NetworkParams net = default_net();
    net.bs = net.drv; // P_b G_b^2 == P_v G_v^2 -> W = 1
    CHECK_THROWS_AS(derive_params(net, 100.0), ModelValidityError);
}

TEST_CASE("derive_params: ratio 16 at alpha_v = 4 gives W = 1/2") {
    NetworkParams net = default_net();
    net.bs = {16.0, 1.0, 4.0};
    net.drv = {1.0, 1.0, 4.0};
    const DerivedParams dp = derive_params(net, 200.0);
    CHECK(dp.w == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(dp.alpha_hat == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("derive_params at the default budget") {
    const DerivedParams dp = derive_params(default_net(), 500.0);
    CHECK(dp.w == doctest::Approx(0.14125375446227542).epsilon(1e-12));
    CHECK(dp.beta == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("W is invariant to a common power rescale") {
    RngStream rng(7);
    for (int i = 0; i < 200; ++i) {
        NetworkParams net = default_net();
        const double w0 = power_ratio_w(net);
        const double factor = std::exp(rng.uniform(-3.0, 3.0));
        net.bs.tx_power *= factor;
        net.drv.tx_power *= factor;
        CHECK(power_ratio_w(net) == doctest::Approx(w0).epsilon(1e-12));
    }
}

TEST_CASE("beta = 1 for alpha_hat = 1, any d_v including zero") {
    NetworkParams net = default_net();
    for (const double d : {0.0, 1e-6, 1.0, 500.0, 1e6}) {
        CHECK(derive_params(net, d).beta == 1.0);
    }
}

TEST_CASE("shape_area basics") {
    CHECK(shape_area(Circle{{0, 0}, 1.0}) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(shape_area(Ellipse{{0, 0}, 1.0, 2.0, 0.0}) == doctest::Approx(2 * kPi).epsilon(1e-15));
    const BoundaryPolyline square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(shape_area(SensingShape(square)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(BoundaryPolyline({{0, 0}, {1, 0}}), NumericError);
}

TEST_CASE("shape_contains basics") {
    CHECK(shape_contains(Circle{{0, 0}, 1.0}, {0, 0}));
    CHECK_FALSE(shape_contains(Circle{{0, 0}, 1.0}, {2, 0}));
    CHECK(shape_contains(Ellipse{{1, 0}, 1.0, 2.0, 0.0}, {1.0, 1.9}));
    const BoundaryPolyline square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(shape_contains(SensingShape(square), {0.5, 0.5}));
    CHECK_FALSE(shape_contains(SensingShape(square), {1.5, 0.5}));
}

TEST_CASE("boundary points are contained for all three shape kinds") {
    const Circle c{{3.0, -2.0}, 7.5};
    const Ellipse e{{1.0, 2.0}, 2.0, 5.0, 0.7};
    std::vector<Point2> poly_pts;
    for (int k = 0; k < 64; ++k) poly_pts.push_back(circle_point(c, 2 * kPi * k / 64));
    const BoundaryPolyline poly(poly_pts);

    for (int k = 0; k < 360; ++k) {
        const double theta = 2 * kPi * k / 360.0;
        CHECK(shape_contains(c, circle_point(c, theta)));
        CHECK(shape_contains(e, ellipse_point(e, theta)));
    }
    for (const Point2& p : poly.points()) CHECK(shape_contains(SensingShape(poly), p));
}

TEST_CASE("polyline simplicity check") {
    const BoundaryPolyline square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(square.is_simple());
    const BoundaryPolyline bowtie({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
    CHECK_FALSE(bowtie.is_simple());
}

TEST_CASE("keyed rng streams are independent of construction order") {
    RngStream a = RngStream::keyed(99, {stream_tag::kDrvMotion, 3, 7});
    RngStream b = RngStream::keyed(99, {stream_tag::kDrvMotion, 3, 8});
    RngStream a2 = RngStream::keyed(99, {stream_tag::kDrvMotion, 3, 7});
    const double va = a.next_double();
    CHECK(va == a2.next_double());
    CHECK(va != b.next_double());
}

TEST_CASE("poisson sampler moments") {
    RngStream rng(1234);
    const double mean = 100.0;
    const int reps = 10000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < reps; ++i) {
        const double k = static_cast<double>(rng.poisson(mean));
        sum += k;
        sum2 += k * k;
    }
    const double m = sum / reps;
    const double var = sum2 / reps - m * m;
    CHECK(std::abs(m - mean) <= 1.0);
    CHECK(std::abs(var - mean) / mean <= 0.05);
}
