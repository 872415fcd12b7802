#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "isacsim/errors.hpp"
#include "isacsim/point_process.hpp"
#include "isacsim/units.hpp"

using namespace isacsim;

TEST_CASE("ppp: zero intensity gives an empty pattern") {
    RngStream rng(1);
    const Window win{100.0, 100.0, true};
    CHECK(sample_ppp(0.0, win, rng).points.empty());
}

TEST_CASE("ppp count moments") {
    const Window win{100.0, 100.0, true};
    const double intensity = 0.01; // lambda * |A| = 100
    double sum = 0.0, sum2 = 0.0;
    const int reps = 10000;
    for (int i = 0; i < reps; ++i) {
        RngStream rng = RngStream::keyed(555, {static_cast<std::uint64_t>(i)});
        const auto n = static_cast<double>(sample_ppp(intensity, win, rng).points.size());
        sum += n;
        sum2 += n * n;
    }
    const double mean = sum / reps;
    const double var = sum2 / reps - mean * mean;
    CHECK(std::abs(mean - 100.0) <= 1.0);
    CHECK(std::abs(var - 100.0) / 100.0 <= 0.05);
}

TEST_CASE("ppp points stay inside the window") {
    RngStream rng(9);
    const Window win{250.0, 80.0, true};
    const PointPattern pat = sample_ppp(0.01, win, rng);
    for (const Point2& p : pat.points) {
        CHECK(p.x >= 0.0);
        CHECK(p.x < win.width);
        CHECK(p.y >= 0.0);
        CHECK(p.y < win.height);
    }
}

TEST_CASE("nearest distance basics") {
    PointPattern pat;
    pat.window = Window{100.0, 100.0, false};
    pat.intensity = 1.0;
    pat.points = {{3.0, 4.0}};
    CHECK(nearest_distance({0.0, 0.0}, pat) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(nearest_distance({3.0, 4.0}, pat) == 0.0);
    pat.points.clear();
    CHECK_THROWS_AS(nearest_distance({0.0, 0.0}, pat), NumericError);
}

TEST_CASE("toroidal metric wraps") {
    PointPattern pat;
    pat.window = Window{10.0, 10.0, true};
    pat.intensity = 1.0;
    pat.points = {{9.5, 9.5}};
    CHECK(nearest_distance({0.5, 0.5}, pat) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    pat.window.wrap = false;
    CHECK(nearest_distance({0.5, 0.5}, pat) ==
          doctest::Approx(std::sqrt(2.0 * 81.0)).epsilon(1e-12));
}

TEST_CASE("mean nearest distance law") {
    CHECK(mean_nearest_distance(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mean_nearest_distance(0.25) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(mean_nearest_distance(0.5e-6) == doctest::Approx(707.10678118654752).epsilon(1e-14));
}

TEST_CASE("empirical nearest-distance mean approaches the Rayleigh law") {
    const double lam = 1e-4;
    const Window win = Window::square_for(lam);
    double sum = 0.0;
    int count = 0;
    for (int rep = 0; rep < 100; ++rep) {
        RngStream rng = RngStream::keyed(4242, {static_cast<std::uint64_t>(rep)});
        const PointPattern pat = sample_ppp(lam, win, rng);
        if (pat.points.empty()) continue;
        for (int q = 0; q < 300; ++q) {
            const Point2 at{win.width * rng.next_double(), win.height * rng.next_double()};
            sum += nearest_distance(at, pat);
            ++count;
        }
    }
    const double mean = sum / count;
    CHECK(std::abs(mean - mean_nearest_distance(lam)) / mean_nearest_distance(lam) <= 0.02);
}

TEST_CASE("expected sensing radius") {
    CHECK(expected_rc(0.25, 0.25) == doctest::Approx(0.5 / 0.75).epsilon(1e-14));
    CHECK(expected_rc(0.14125375446227542, 0.5e-6) ==
          doctest::Approx(309.4711372269216).epsilon(1e-13));
    CHECK_THROWS_AS(expected_rc(1.0, 0.25), ModelValidityError);
}

TEST_CASE("event probability identity against the component means") {
    // sqrt(W)/((1-W) 2|A| sqrt(lb lv)) == 2 E[L] E[R_c] / |A| with
    // E[L] = 1/(2 sqrt(lv)) and E[R_c] = sqrt(W)/(1-W)/(2 sqrt(lb)).
    RngStream rng(909);
    for (int i = 0; i < 300; ++i) {
        const double w = rng.uniform(0.01, 0.7);
        const double lb = std::exp(rng.uniform(-14.0, -10.0));
        const double lv = std::exp(rng.uniform(-14.0, -10.0));
        const double area = std::exp(rng.uniform(16.0, 20.0));
        const double closed = std::sqrt(w) / (1.0 - w) / (2.0 * area * std::sqrt(lb * lv));
        const double composed = 2.0 * mean_nearest_distance(lv) * expected_rc(w, lb) / area;
        CHECK(closed == doctest::Approx(composed).epsilon(1e-12));
    }
}

TEST_CASE("nearest neighbor grid agrees with brute force") {
    const Window win{1000.0, 1000.0, true};
    RngStream rng(808);
    const PointPattern pat = sample_ppp(2e-4, win, rng);
    REQUIRE(!pat.points.empty());
    const NearestNeighborGrid grid(pat.points, win);
    for (int q = 0; q < 500; ++q) {
        const Point2 at{win.width * rng.next_double(), win.height * rng.next_double()};
        const double brute = nearest_distance(at, pat);
        CHECK(grid.nearest(at).distance == doctest::Approx(brute).epsilon(1e-12));
    }
}
