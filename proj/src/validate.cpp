#include "isacsim/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <sstream>

#include "isacsim/channel.hpp"
#include "isacsim/cli.hpp"
#include "isacsim/coverage.hpp"
#include "isacsim/drr.hpp"
#include "isacsim/mobility.hpp"
#include "isacsim/montecarlo.hpp"
#include "isacsim/point_process.hpp"
#include "isacsim/rng.hpp"
#include "isacsim/units.hpp"

namespace isacsim {

namespace {

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return buf;
}

// seed tags for the statistical criteria, distinct from the engine tags
constexpr std::uint64_t kTagMobility = 100;
constexpr std::uint64_t kTagPeriods = 101;
constexpr std::uint64_t kTagKs = 102;
constexpr std::uint64_t kTagSwerling = 103;

// Wall-clock gate for the criteria that carry a runtime budget. Measured
// times go to stderr only, keeping the report text byte-stable.
class RuntimeGate {
public:
    explicit RuntimeGate(const char* label, double budget_s)
        : label_(label), budget_s_(budget_s), start_(std::chrono::steady_clock::now()) {}
    bool within_budget() const {
        const double s = elapsed();
        std::fprintf(stderr, "[timing] %s: %.2f s (budget %.0f s)\n", label_, s, budget_s_);
        return s < budget_s_;
    }
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    const char* label_;
    double budget_s_;
    std::chrono::steady_clock::time_point start_;
};

struct Anchors {
    // Section-IV default deployment, recomputed from first principles before
    // the build and frozen here.
    static constexpr double kW = 0.14125375446227542;
    static constexpr double kCenter = 582.24417585303445;
    static constexpr double kRadius = 218.82913971466886;
    static constexpr double kXiR = 8.6530775338064742e-4;
    static constexpr double kExpectedRc = 309.4711372269216;
};

CriterionResult case1_exactness() {
    CriterionResult r{1, "Case-1 exactness (exact contour vs closed-form circle)", true, ""};
    const RuntimeGate gate("criterion 1", 5.0);
    double worst_vertex = 0.0, worst_iou = 1.0;
    for (const double w : {0.1, 0.25, 0.5}) {
        for (const double d_v : {100.0, 500.0, 1000.0}) {
            const BoundaryPolyline poly = exact_boundary(w, 1.0, d_v, 720);
            const Circle circ = circle_approximation(w, 1.0, d_v);
            for (const Point2& p : poly.points()) {
                const double err = std::abs(distance(p, circ.center) - circ.radius);
                worst_vertex = std::max(worst_vertex, err);
            }
            const auto q = approximation_quality(poly, SensingShape(circ), w, 1.0, d_v);
            worst_iou = std::min(worst_iou, q.iou);
        }
    }
    const bool in_budget = gate.within_budget();
    r.pass = worst_vertex <= 1e-6 && worst_iou >= 0.999 && in_budget;
    r.details = fmt("worst vertex error %.3g m (<= 1e-6), min IoU %.6f (>= 0.999), runtime "
                    "within 5 s: %s",
                    worst_vertex, worst_iou, in_budget ? "yes" : "NO");
    return r;
}

CriterionResult default_derivations(const NetworkParams& net) {
    CriterionResult r{2, "default-parameter derivations (W, R_c, center, xi_r)", true, ""};
    const double w = power_ratio_w(net);
    const Circle c = circle_approximation(w, 1.0, 500.0);
    const double xi_r = ranging_repetition_rate(w, net.bs_intensity, net.drv_intensity,
                                                net.speed, net.pause_mean);
    const bool ok_w = std::abs(w - 0.14125) <= 1e-4;
    const bool ok_rc = std::abs(c.radius - 218.83) <= 0.05;
    const bool ok_cx = std::abs(c.center.x - 582.24) <= 0.05;
    const bool ok_xi = std::abs(xi_r - 8.65e-4) <= 1e-6;
    // tie the build to the high-precision independent recomputation as well
    const bool ok_frozen = std::abs(w - Anchors::kW) <= 1e-12 &&
                           std::abs(c.radius - Anchors::kRadius) <= 1e-9 &&
                           std::abs(c.center.x - Anchors::kCenter) <= 1e-9 &&
                           std::abs(xi_r - Anchors::kXiR) <= 1e-15;
    r.pass = ok_w && ok_rc && ok_cx && ok_xi && ok_frozen;
    r.details = fmt("W = %.8f (0.14125 +- 1e-4), R_c = %.4f (218.83 +- 0.05), center = %.4f "
                    "(582.24 +- 0.05), xi_r = %.6e (8.65e-4 +- 1e-6), frozen-anchor match: %s",
                    w, c.radius, c.center.x, xi_r, ok_frozen ? "yes" : "NO");
    return r;
}

CriterionResult mobility_laws(const NetworkParams& net, std::uint64_t seed) {
    CriterionResult r{3, "mobility law (mean transition length, mean period)", true, ""};
    const RuntimeGate gate("criterion 3", 30.0);
    const MobilityParams mob{net.drv_intensity, net.speed, net.pause_mean};

    RngStream rng = RngStream::keyed(seed, {kTagMobility});
    double len_sum = 0.0;
    const int n_len = 1'000'000;
    for (int i = 0; i < n_len; ++i)
        len_sum += sample_transition({0.0, 0.0}, mob, rng).length;
    const double len_mean = len_sum / n_len;
    const double len_expect = mean_nearest_distance(net.drv_intensity);

    RngStream rng2 = RngStream::keyed(seed, {kTagPeriods});
    double period_sum = 0.0;
    const int n_per = 100'000;
    for (int i = 0; i < n_per; ++i) {
        const Transition t = sample_transition({0.0, 0.0}, mob, rng2);
        period_sum += t.duration + t.pause_after;
    }
    const double period_mean = period_sum / n_per;
    const double period_expect = expected_period(mob);

    const double len_err = std::abs(len_mean - len_expect) / len_expect;
    const double per_err = std::abs(period_mean - period_expect) / period_expect;
    const bool in_budget = gate.within_budget();
    r.pass = len_err <= 0.01 && per_err <= 0.01 && in_budget;
    r.details = fmt("mean length %.3f vs %.3f (err %.3f%%), mean period %.3f vs %.3f (err %.3f%%), "
                    "runtime within 30 s: %s",
                    len_mean, len_expect, 100 * len_err, period_mean, period_expect,
                    100 * per_err, in_budget ? "yes" : "NO");
    return r;
}

CriterionResult nearest_distance_ks(const NetworkParams& net, std::uint64_t seed) {
    CriterionResult r{4, "nearest-BS distance law (KS distance vs Rayleigh CDF)", true, ""};
    const double lam = net.bs_intensity;
    const Window win = Window::square_for(lam);

    const int n_patterns = 200, n_queries = 500;
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(n_patterns) * n_queries);
    for (int p = 0; p < n_patterns; ++p) {
        RngStream rng = RngStream::keyed(seed, {kTagKs, static_cast<std::uint64_t>(p)});
        PointPattern pat = sample_ppp(lam, win, rng);
        if (pat.points.empty()) continue;
        for (int q = 0; q < n_queries; ++q) {
            const Point2 at{win.width * rng.next_double(), win.height * rng.next_double()};
            samples.push_back(nearest_distance(at, pat));
        }
    }
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double F = 1.0 - std::exp(-kPi * lam * samples[i] * samples[i]);
        ks = std::max(ks, std::abs(static_cast<double>(i) / n - F));
        ks = std::max(ks, std::abs(static_cast<double>(i + 1) / n - F));
    }
    r.pass = ks <= 0.01 && samples.size() >= 100'000;
    r.details = fmt("KS distance %.5f (<= 0.01) over %zu samples", ks, samples.size());
    return r;
}

CriterionResult mean_rc_check(const NetworkParams& net, const SimReport& rep) {
    CriterionResult r{5, "E[R_c] composition (Monte-Carlo mean sensing radius)", true, ""};
    const double expect = expected_rc(power_ratio_w(net), net.bs_intensity);
    if (!rep.mean_rc || rep.rc_samples < 100'000) {
        r.pass = false;
        r.details = fmt("insufficient radius samples (%llu)",
                        static_cast<unsigned long long>(rep.rc_samples));
        return r;
    }
    const double err = std::abs(*rep.mean_rc - expect) / expect;
    r.pass = err <= 0.01;
    r.details = fmt("mean R_c %.3f vs %.3f analytic (err %.3f%%, %llu samples)", *rep.mean_rc,
                    expect, 100 * err, static_cast<unsigned long long>(rep.rc_samples));
    return r;
}

CriterionResult dwell_probability(const SimConfig& sim, const std::vector<RepResult>& batch,
                                  const NetworkParams& net, double batch_seconds) {
    CriterionResult r{6, "dwell-exceed probability vs closed form", true, ""};
    const double w = power_ratio_w(net);
    // three PRI points share one batch; the per-point budget is 120 s
    const bool in_budget = batch_seconds < 3 * 120.0;
    std::fprintf(stderr, "[timing] criterion 6 shared batch: %.2f s (budget 360 s)\n",
                 batch_seconds);
    std::string det;
    if (!in_budget) {
        r.pass = false;
        det += "over the runtime budget; ";
    }
    for (const double tau : {0.01, 0.05, 0.1}) {
        const SimReport rep = aggregate(sim, batch, tau);
        const double analytic = dwell_exceed_probability(w, net.bs_intensity, net.speed, tau);
        if (!rep.empirical_p_dwell || rep.event_count < 10'000) {
            r.pass = false;
            det += fmt("tau=%.2f: too few events (%llu); ", tau,
                       static_cast<unsigned long long>(rep.event_count));
            continue;
        }
        const double err = std::abs(*rep.empirical_p_dwell - analytic);
        if (err > 0.02) r.pass = false;
        det += fmt("tau=%.2f: %.4f vs %.4f (|err| %.4f, %llu events); ", tau,
                   *rep.empirical_p_dwell, analytic, err,
                   static_cast<unsigned long long>(rep.event_count));
    }
    r.details = det;
    return r;
}

CriterionResult drr_grid(const ExperimentConfig& cfg, const NetworkParams& net,
                         const std::vector<RepResult>& default_batch, double batch_seconds,
                         int threads) {
    CriterionResult r{7, "DRR closed form vs assumption-matched simulation", true, ""};
    const RuntimeGate gate("criterion 7 (own batches)", 600.0);
    const double w = power_ratio_w(net);
    int covered = 0, total = 0;
    double worst_rel = 0.0;
    std::string det;

    for (const double lv_km2 : {0.5, 1.0, 2.0, 5.0}) {
        NetworkParams n = net;
        n.drv_intensity = lv_km2 * 1e-6;
        SimConfig sim;
        sim.net = n;
        sim.replications = (lv_km2 == 1.0) ? cfg.replications : 600;
        sim.periods_per_drv = cfg.periods_per_drv;
        sim.seed = cfg.seed;
        sim.fidelity = Fidelity::kAssumptionMatched;

        std::vector<RepResult> batch;
        const std::vector<RepResult>& use =
            (lv_km2 == 1.0) ? default_batch : (batch = run_batch(sim, threads), batch);

        for (const double tau : {0.01, 0.05}) {
            const SimReport rep = aggregate(sim, use, tau);
            const double xi_r = ranging_repetition_rate(w, n.bs_intensity, n.drv_intensity,
                                                        n.speed, n.pause_mean);
            const double analytic =
                xi_r * dwell_exceed_probability(w, n.bs_intensity, n.speed, tau);
            const double rel = std::abs(rep.empirical_xi - analytic) / analytic;
            worst_rel = std::max(worst_rel, rel);
            ++total;
            if (std::abs(rep.empirical_xi - analytic) <= rep.xi_ci) ++covered;
            if (rel > 0.05) r.pass = false;
            det += fmt("lv=%.1f tau=%.2f: %.4e vs %.4e (%.2f%%); ", lv_km2, tau,
                       rep.empirical_xi, analytic, 100 * rel);
        }
    }
    const double coverage = static_cast<double>(covered) / total;
    if (coverage < 0.9) r.pass = false;
    const bool in_budget = gate.elapsed() + batch_seconds < 600.0;
    std::fprintf(stderr, "[timing] criterion 7 total incl. shared batch: %.2f s (budget 600 s)\n",
                 gate.elapsed() + batch_seconds);
    if (!in_budget) r.pass = false;
    r.details = det + fmt("worst rel err %.2f%% (<= 5%%), CI coverage %d/%d, runtime within "
                          "10 min: %s",
                          100 * worst_rel, covered, total, in_budget ? "yes" : "NO");
    return r;
}

CriterionResult monotonicity(const NetworkParams& net) {
    CriterionResult r{8, "analytic DRR monotone in drv intensity and PRI", true, ""};
    const double w = power_ratio_w(net);

    bool inc = true;
    double prev = -1.0;
    for (int i = 0; i < 100; ++i) {
        const double lv = 0.1e-6 * std::pow(100.0, i / 99.0); // 0.1 .. 10 per km^2
        const double xi =
            ranging_repetition_rate(w, net.bs_intensity, lv, net.speed, net.pause_mean) *
            dwell_exceed_probability(w, net.bs_intensity, net.speed, net.pri);
        if (xi <= prev) inc = false;
        prev = xi;
    }
    bool dec = true;
    prev = std::numeric_limits<double>::infinity();
    const double xi_r = ranging_repetition_rate(w, net.bs_intensity, net.drv_intensity,
                                                net.speed, net.pause_mean);
    for (int i = 0; i < 100; ++i) {
        const double tau = 0.01 + (0.2 - 0.01) * i / 99.0;
        const double xi = xi_r * dwell_exceed_probability(w, net.bs_intensity, net.speed, tau);
        if (xi >= prev) dec = false;
        prev = xi;
    }
    r.pass = inc && dec;
    r.details = fmt("strictly increasing along 100-point lambda_v grid: %s; strictly decreasing "
                    "along 100-point tau grid: %s",
                    inc ? "yes" : "NO", dec ? "yes" : "NO");
    return r;
}

CriterionResult fig2_ordering(const NetworkParams& net) {
    CriterionResult r{9, "coverage-area ordering between the two default cases", true, ""};
    const double d_v = 500.0;

    NetworkParams n1 = net;
    n1.bs.path_loss_exponent = 4.0;
    n1.drv.path_loss_exponent = 4.0;
    const double w1 = power_ratio_w(n1);
    const Circle c1 = circle_approximation(w1, 1.0, d_v);
    const double area_c1_circle = shape_area(SensingShape(c1));
    const double area_c1_exact = exact_boundary(w1, 1.0, d_v, 2000).area();

    NetworkParams n2 = net;
    n2.bs.path_loss_exponent = 3.0;
    n2.drv.path_loss_exponent = 5.0;
    const double w2 = power_ratio_w(n2);
    const double ah2 = 3.0 / 5.0;
    const double area_c2_exact = exact_boundary(w2, ah2, d_v, 2000).area();
    const double area_c2_exp = shape_area(SensingShape(
        conic_to_ellipse(taylor_conic(w2, ah2, d_v, {d_v, 0.0}, ConicMode::kExpansion))));
    const double area_c2_pub = shape_area(SensingShape(
        conic_to_ellipse(taylor_conic(w2, ah2, d_v, {d_v, 0.0}, ConicMode::kPublished))));

    r.pass = area_c1_circle > area_c2_exp && area_c1_circle > area_c2_pub &&
             area_c1_circle > area_c2_exact && area_c1_exact > area_c2_exact;
    r.details = fmt("case1 circle %.4g, case1 exact %.4g > case2 expansion %.4g / published %.4g / "
                    "exact %.4g m^2",
                    area_c1_circle, area_c1_exact, area_c2_exp, area_c2_pub, area_c2_exact);
    return r;
}

CriterionResult swerling_sampler(std::uint64_t seed) {
    CriterionResult r{10, "Swerling-1 RCS sampler (mean and CDF at the mean)", true, ""};
    RngStream rng = RngStream::keyed(seed, {kTagSwerling});
    const int n = 1'000'000;
    double sum = 0.0;
    int below = 0;
    for (int i = 0; i < n; ++i) {
        const double s = sample_rcs(1.0, rng).sigma_t;
        sum += s;
        below += (s <= 1.0) ? 1 : 0;
    }
    const double mean = sum / n;
    const double cdf = static_cast<double>(below) / n;
    const double cdf_expect = 1.0 - std::exp(-1.0);
    r.pass = std::abs(mean - 1.0) <= 0.01 && std::abs(cdf - cdf_expect) <= 0.005;
    r.details = fmt("mean %.5f (1 +- 0.01), CDF(mean) %.5f vs %.5f (+- 0.005)", mean, cdf,
                    cdf_expect);
    return r;
}

std::string report_to_string(const SimReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << r.empirical_xi << ' ' << r.xi_ci << ' ' << r.empirical_xi_r << ' ' << r.xi_r_ci << ' '
       << (r.empirical_p_dwell ? *r.empirical_p_dwell : -1.0) << ' ' << r.p_dwell_ci << ' '
       << (r.mean_rc ? *r.mean_rc : -1.0) << ' ' << r.rc_ci << ' ' << r.event_count << ' '
       << r.qualifying_count << ' ' << r.rc_samples << ' ' << r.sim_time << ' ' << r.drv_total;
    return os.str();
}

CriterionResult determinism(const ExperimentConfig& cfg) {
    CriterionResult r{11, "determinism across reruns and worker counts", true, ""};

    ExperimentConfig small = cfg;
    small.replications = 100;
    SimConfig sim = small.sim_config();

    const std::string a = report_to_string(estimate(sim, 1));
    const std::string b = report_to_string(estimate(sim, 4));
    const std::string c = report_to_string(estimate(sim, 8));
    const bool reports_equal = (a == b) && (b == c);

    const auto cov1 = build_coverage_outputs(small);
    const auto cov2 = build_coverage_outputs(small);
    const bool cov_equal = cov1.boundaries.to_csv(small.seed, small.config_hash) ==
                               cov2.boundaries.to_csv(small.seed, small.config_hash) &&
                           cov1.svgs == cov2.svgs;

    ExperimentConfig tiny = small;
    tiny.replications = 50;
    tiny.sweep = SweepSpec{"pri", 0.01, 0.1, 3, false};
    const auto sw1 = build_drr_sweep(tiny, 2);
    const auto sw2 = build_drr_sweep(tiny, 7);
    const bool sweep_equal = sw1.table.to_csv(tiny.seed, tiny.config_hash) ==
                                 sw2.table.to_csv(tiny.seed, tiny.config_hash) &&
                             sw1.svg == sw2.svg;

    r.pass = reports_equal && cov_equal && sweep_equal;
    r.details = fmt("estimate identical across 1/4/8 workers: %s; coverage outputs byte-identical: "
                    "%s; sweep outputs byte-identical across 2/7 workers: %s",
                    reports_equal ? "yes" : "NO", cov_equal ? "yes" : "NO",
                    sweep_equal ? "yes" : "NO");
    return r;
}

// Expansion-mode vs published-grouping coefficient comparison, at an
// alpha_hat just below 1 (where the expansion provably reduces to the exact
// circle) and at the small-exponent default case.
CriterionResult conic_divergence(const NetworkParams& net, std::string& report_out) {
    CriterionResult r{12, "conic coefficient divergence report (expansion vs published)", true, ""};
    std::string rep;

    const double w = power_ratio_w(net);
    const double ah = 1.0 - 1e-9;
    const double d_v = 500.0;
    const Point2 anchor{500.0, 0.0};

    const ConicCoefficients ce = taylor_conic(w, ah, d_v, anchor, ConicMode::kExpansion);
    const ConicCoefficients cp = taylor_conic(w, ah, d_v, anchor, ConicMode::kPublished);
    const Ellipse ee = conic_to_ellipse(ce);
    const Ellipse ep = conic_to_ellipse(cp);
    const Circle exact = circle_approximation(w, 1.0, d_v);

    const double rel_center = std::abs(ee.center.x - exact.center.x) / exact.center.x;
    const double rel_radius =
        std::max(std::abs(ee.s1 - exact.radius), std::abs(ee.s2 - exact.radius)) / exact.radius;
    const bool expansion_matches_circle = rel_center <= 1e-6 && rel_radius <= 1e-6;

    // Predicted coefficient deltas between the two groupings:
    //   d_published - d_exp = W ah i q^(ah-1) * (1 + 2(ah - 1))
    //   f_published - f_exp = W ah j q^(ah-1) * (1 + 2(ah - 1))
    //   b_published         = b_exp / 2
    //   g_published - g_exp = W q^ah * ah (3 - 2 ah)
    const double q = anchor.x * anchor.x + anchor.y * anchor.y;
    const double pred_d = w * ah * anchor.x * std::pow(q, ah - 1.0) * (1.0 + 2.0 * (ah - 1.0));
    const double pred_g = w * std::pow(q, ah) * ah * (3.0 - 2.0 * ah);
    const double err_d = std::abs((cp.d - ce.d) - pred_d) / std::abs(pred_d);
    const double err_g = std::abs((cp.g - ce.g) - pred_g) / std::abs(pred_g);
    const bool deltas_match = err_d <= 1e-12 && err_g <= 1e-12;

    // Off-axis spot check for the b and f relations.
    const Point2 off{450.0, 150.0};
    const ConicCoefficients oe = taylor_conic(w, 0.6, d_v, off, ConicMode::kExpansion);
    const ConicCoefficients op = taylor_conic(w, 0.6, d_v, off, ConicMode::kPublished);
    const double qoff = off.x * off.x + off.y * off.y;
    const double pred_f_off =
        w * 0.6 * off.y * std::pow(qoff, 0.6 - 1.0) * (1.0 + 2.0 * (0.6 - 1.0));
    const bool off_match = std::abs(op.b - 0.5 * oe.b) <= 1e-12 * std::abs(oe.b) &&
                           std::abs((op.f - oe.f) - pred_f_off) <= 1e-12 * std::abs(pred_f_off);

    rep += "conic coefficient divergence (expansion-mode vs published grouping)\n";
    rep += fmt("  anchor (%.0f, %.0f), alpha_hat = 1 - 1e-9, W = %.8f, d_v = %.0f\n", anchor.x,
               anchor.y, w, d_v);
    rep += fmt("    expansion: a=%.9g b=%.9g c=%.9g d=%.9g f=%.9g g=%.9g\n", ce.a, ce.b, ce.c,
               ce.d, ce.f, ce.g);
    rep += fmt("    published: a=%.9g b=%.9g c=%.9g d=%.9g f=%.9g g=%.9g\n", cp.a, cp.b, cp.c,
               cp.d, cp.f, cp.g);
    rep += fmt("    expansion ellipse: center %.4f, axes %.4f/%.4f  (exact circle: %.4f, %.4f)\n",
               ee.center.x, ee.s1, ee.s2, exact.center.x, exact.radius);
    rep += fmt("    published ellipse: center %.4f, axes %.4f/%.4f\n", ep.center.x, ep.s1, ep.s2);
    rep += fmt("    d delta observed %.9g, predicted W*ah*i*q^(ah-1)+quadratic = %.9g (rel err %.2e)\n",
               cp.d - ce.d, pred_d, err_d);
    rep += fmt("    g delta observed %.9g, predicted W*q^ah*ah*(3-2ah)     = %.9g (rel err %.2e)\n",
               cp.g - ce.g, pred_g, err_g);
    rep += fmt("  off-axis anchor (%.0f, %.0f), alpha_hat = 0.6: b_published/b_expansion = %.6f "
               "(predicted 0.5), f delta matches prediction: %s\n",
               off.x, off.y, op.b / oe.b, off_match ? "yes" : "NO");
    rep += "  The published grouping does not reduce to the equal-power circle at alpha_hat -> 1; "
           "the expansion mode does and is the default.\n";

    report_out = rep;
    r.pass = expansion_matches_circle && deltas_match && off_match && !rep.empty();
    r.details = fmt("expansion matches circle at ah->1 (center rel %.2e, radius rel %.2e); "
                    "coefficient deltas match predictions: %s",
                    rel_center, rel_radius, (deltas_match && off_match) ? "yes" : "NO");
    return r;
}

} // namespace

ValidationReport run_acceptance(const ExperimentConfig& cfg, int threads) {
    ValidationReport out;

    // The anchors are properties of the default deployment; user configs
    // contribute the seed, replication budget and fidelity.
    const ExperimentConfig defaults = default_config();
    const NetworkParams net = defaults.net;

    SimConfig default_sim;
    default_sim.net = net;
    default_sim.replications = cfg.replications;
    default_sim.periods_per_drv = cfg.periods_per_drv;
    default_sim.seed = cfg.seed;
    default_sim.fidelity = Fidelity::kAssumptionMatched;
    const auto batch_start = std::chrono::steady_clock::now();
    const std::vector<RepResult> default_batch = run_batch(default_sim, threads);
    const double batch_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - batch_start).count();
    const SimReport default_report = aggregate(default_sim, default_batch, net.pri);

    out.criteria.push_back(case1_exactness());
    out.criteria.push_back(default_derivations(net));
    out.criteria.push_back(mobility_laws(net, cfg.seed));
    out.criteria.push_back(nearest_distance_ks(net, cfg.seed));
    out.criteria.push_back(mean_rc_check(net, default_report));
    out.criteria.push_back(dwell_probability(default_sim, default_batch, net, batch_seconds));
    out.criteria.push_back(drr_grid(cfg, net, default_batch, batch_seconds, threads));
    out.criteria.push_back(monotonicity(net));
    out.criteria.push_back(fig2_ordering(net));
    out.criteria.push_back(swerling_sampler(cfg.seed));
    ExperimentConfig det_cfg = defaults;
    det_cfg.seed = cfg.seed;
    out.criteria.push_back(determinism(det_cfg));
    out.criteria.push_back(conic_divergence(net, out.divergence_report));

    out.all_pass = true;
    std::string text;
    text += "ISAC sensing acceptance report\n";
    text += fmt("tool_version=%s seed=%llu config_hash=%s\n", kToolVersion,
                static_cast<unsigned long long>(cfg.seed), hex64(cfg.config_hash).c_str());
    text += fmt("replications=%d periods_per_drv=%d\n\n", cfg.replications, cfg.periods_per_drv);
    for (const CriterionResult& c : out.criteria) {
        if (!c.pass) out.all_pass = false;
        text += fmt("criterion %2d: %s  %s\n              %s\n", c.id,
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.details.c_str());
    }
    text += fmt("\noverall: %s (%d/%d)\n\n", out.all_pass ? "PASS" : "FAIL",
                static_cast<int>(std::count_if(out.criteria.begin(), out.criteria.end(),
                                               [](const auto& c) { return c.pass; })),
                static_cast<int>(out.criteria.size()));
    text += "-- conic divergence report --\n" + out.divergence_report;
    out.text = text;
    return out;
}

} // namespace isacsim
