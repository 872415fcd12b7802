#include "isacsim/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "isacsim/errors.hpp"
#include "isacsim/mobility.hpp"
#include "isacsim/rng.hpp"

namespace isacsim {

namespace {

void check_sim_config(const SimConfig& cfg) {
    if (cfg.replications < 1) throw ModelValidityError("SimConfig: replications must be >= 1");
    if (cfg.periods_per_drv < 1)
        throw ModelValidityError("SimConfig: periods_per_drv must be >= 1");
    if (!(cfg.net.bs_intensity > 0.0))
        throw ModelValidityError("SimConfig: bs_intensity must be > 0");
    if (!(cfg.net.drv_intensity >= 0.0))
        throw ModelValidityError("SimConfig: drv_intensity must be >= 0");
    if (!(cfg.net.speed > 0.0)) throw ModelValidityError("SimConfig: speed must be > 0");
    if (!(cfg.net.pause_mean >= 0.0)) throw ModelValidityError("SimConfig: pause_mean must be >= 0");
    power_ratio_w(cfg.net); // rejects W >= 1
}

double sample_mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double ci_half_width(const std::vector<double>& v) {
    const std::size_t n = v.size();
    if (n < 2) return 0.0;
    const double m = sample_mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    return 1.96 * sd / std::sqrt(static_cast<double>(n));
}

} // namespace

Window effective_window(const SimConfig& cfg) {
    if (cfg.window.width > 0.0 && cfg.window.height > 0.0) return cfg.window;
    const double lam_min = (cfg.net.drv_intensity > 0.0)
                               ? std::min(cfg.net.bs_intensity, cfg.net.drv_intensity)
                               : cfg.net.bs_intensity;
    return Window::square_for(lam_min);
}

std::optional<SegmentDwell> segment_disk_dwell(Point2 seg_start, Point2 seg_end,
                                               const Circle& disk, double speed,
                                               Fidelity fidelity) {
    if (!(speed > 0.0)) throw ModelValidityError("segment_disk_dwell: speed must be > 0");
    const Point2 p0 = seg_start - disk.center;
    const Point2 step = seg_end - seg_start;
    const double aa = dot(step, step);
    const double cc = dot(p0, p0) - disk.radius * disk.radius;
    if (cc <= 0.0) return std::nullopt; // already inside: not an entering crossing
    if (aa == 0.0) return std::nullopt;
    const double bb = 2.0 * dot(p0, step);
    const double disc = bb * bb - 4.0 * aa * cc;
    if (disc <= 0.0) return std::nullopt; // miss or tangent graze
    const double sq = std::sqrt(disc);
    const double s_in = (-bb - sq) / (2.0 * aa);
    const double s_out = (-bb + sq) / (2.0 * aa);
    if (!(s_in > 0.0 && s_in <= 1.0)) return std::nullopt;

    SegmentDwell out;
    out.ends_inside = s_out > 1.0;
    const double seg_len = std::sqrt(aa);
    if (fidelity == Fidelity::kAssumptionMatched) {
        // full geometric chord, even when the waypoint lands inside the disk
        out.dwell = (s_out - s_in) * seg_len / speed;
    } else {
        out.dwell = (std::min(s_out, 1.0) - s_in) * seg_len / speed;
    }
    return out;
}

RepResult run_replication(const SimConfig& cfg, int rep_index) {
    check_sim_config(cfg);
    const Window window = effective_window(cfg);
    const double w = power_ratio_w(cfg.net);
    const double rc_factor = std::sqrt(w) / (1.0 - w);
    const double center_factor = w / (1.0 - w);
    const std::uint64_t rep = static_cast<std::uint64_t>(rep_index);

    RepResult out;

    // Static BS layer; an empty draw is resampled and counted.
    PointPattern bs;
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (attempt > 1000)
            throw NumericError("run_replication: BS pattern empty after 1000 resamples; "
                               "window far too small for bs_intensity");
        RngStream bs_rng =
            RngStream::keyed(cfg.seed, {stream_tag::kBsPattern, rep, attempt});
        bs = sample_ppp(cfg.net.bs_intensity, window, bs_rng);
        if (!bs.points.empty()) break;
        ++out.bs_resamples;
    }
    const NearestNeighborGrid grid(bs.points, window);

    RngStream drv_rng = RngStream::keyed(cfg.seed, {stream_tag::kDrvPattern, rep});
    const PointPattern drvs = sample_ppp(cfg.net.drv_intensity, window, drv_rng);
    out.n_drv = static_cast<std::uint32_t>(drvs.points.size());

    const Point2 target{window.width / 2.0, window.height / 2.0};
    const MobilityParams mob{cfg.net.drv_intensity, cfg.net.speed, cfg.net.pause_mean};

    for (std::uint32_t d = 0; d < out.n_drv; ++d) {
        RngStream motion = RngStream::keyed(cfg.seed, {stream_tag::kDrvMotion, rep, d});
        Point2 pos = drvs.points[d];
        for (int k = 0; k < cfg.periods_per_drv; ++k) {
            const auto nn = grid.nearest(pos);
            const double rc = rc_factor * nn.distance;
            out.rc_sum += rc;
            ++out.rc_count;

            // Equal-power disk, frozen for this period: centered on the
            // BS-DRV ray beyond the DRV, translating rigidly with it.
            const Point2 disk_center{pos.x - nn.delta.x * center_factor,
                                     pos.y - nn.delta.y * center_factor};

            const Transition tr = sample_transition(pos, mob, motion);
            const Point2 step = tr.end - tr.start;

            // Target motion relative to the disk (minimum image).
            const Point2 q0 = window.delta(disk_center, target);
            const auto hit = segment_disk_dwell(q0, q0 - step, Circle{{0.0, 0.0}, rc},
                                                cfg.net.speed, cfg.fidelity);
            if (hit) {
                double kappa = hit->dwell;
                if (cfg.fidelity == Fidelity::kFull && hit->ends_inside) {
                    // pause credit against the disk recomputed at the arrival waypoint
                    const Point2 arrived = window.wrap_point(pos + step);
                    const auto nn2 = grid.nearest(arrived);
                    const double rc2 = rc_factor * nn2.distance;
                    const Point2 c2{arrived.x - nn2.delta.x * center_factor,
                                    arrived.y - nn2.delta.y * center_factor};
                    const Point2 rel = window.delta(c2, target);
                    if (dot(rel, rel) <= rc2 * rc2) kappa += tr.pause_after;
                }
                out.events.push_back(DwellEvent{d, static_cast<std::uint32_t>(k), kappa,
                                                kappa >= cfg.net.pri});
            }
            out.drv_time += tr.duration + tr.pause_after;
            pos = window.wrap_point(pos + step);
        }
    }
    return out;
}

std::vector<RepResult> run_batch(const SimConfig& cfg, int threads) {
    check_sim_config(cfg);
    const int n_reps = cfg.replications;
    std::vector<RepResult> results(static_cast<std::size_t>(n_reps));
    int n_workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (n_workers < 1) n_workers = 1;
    n_workers = std::min(n_workers, n_reps);

    if (n_workers == 1) {
        for (int r = 0; r < n_reps; ++r) results[static_cast<std::size_t>(r)] = run_replication(cfg, r);
        return results;
    }

    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    std::exception_ptr error;
    std::mutex error_mu;
    for (int t = 0; t < n_workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const int r = next.fetch_add(1);
                if (r >= n_reps) return;
                try {
                    results[static_cast<std::size_t>(r)] = run_replication(cfg, r);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

SimReport aggregate(const SimConfig& cfg, const std::vector<RepResult>& batch, double tau) {
    if (!(tau >= 0.0)) throw ModelValidityError("aggregate: tau must be >= 0");
    SimReport rep;
    rep.seed = cfg.seed;
    rep.replications = static_cast<int>(batch.size());

    double wall_total = 0.0;
    double rc_sum = 0.0;
    std::vector<double> xi_reps, xi_r_reps, p_reps, rc_reps;
    xi_reps.reserve(batch.size());
    xi_r_reps.reserve(batch.size());

    for (const RepResult& r : batch) {
        std::uint64_t qual = 0;
        for (const DwellEvent& e : r.events) qual += (e.dwell >= tau) ? 1 : 0;
        rep.event_count += r.events.size();
        rep.qualifying_count += qual;
        rep.rc_samples += r.rc_count;
        rep.drv_total += r.n_drv;
        rep.bs_resamples += r.bs_resamples;
        rc_sum += r.rc_sum;

        const double wall = (r.n_drv > 0) ? r.drv_time / static_cast<double>(r.n_drv) : 0.0;
        wall_total += wall;
        const double xi = (wall > 0.0) ? static_cast<double>(qual) / wall : 0.0;
        const double xi_r =
            (wall > 0.0) ? static_cast<double>(r.events.size()) / wall : 0.0;
        xi_reps.push_back(xi);
        xi_r_reps.push_back(xi_r);
        if (!r.events.empty())
            p_reps.push_back(static_cast<double>(qual) / static_cast<double>(r.events.size()));
        if (r.rc_count > 0) rc_reps.push_back(r.rc_sum / static_cast<double>(r.rc_count));
    }

    rep.sim_time = wall_total;
    if (wall_total > 0.0) {
        rep.empirical_xi = static_cast<double>(rep.qualifying_count) / wall_total;
        rep.empirical_xi_r = static_cast<double>(rep.event_count) / wall_total;
    }
    rep.xi_ci = ci_half_width(xi_reps);
    rep.xi_r_ci = ci_half_width(xi_r_reps);
    if (rep.event_count > 0) {
        rep.empirical_p_dwell =
            static_cast<double>(rep.qualifying_count) / static_cast<double>(rep.event_count);
        rep.p_dwell_ci = ci_half_width(p_reps);
    }
    if (rep.rc_samples > 0) {
        rep.mean_rc = rc_sum / static_cast<double>(rep.rc_samples);
        rep.rc_ci = ci_half_width(rc_reps);
    }
    return rep;
}

SimReport estimate(const SimConfig& cfg, int threads) {
    const auto batch = run_batch(cfg, threads);
    return aggregate(cfg, batch, cfg.net.pri);
}

} // namespace isacsim
