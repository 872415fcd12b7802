#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isacsim/geometry.hpp"
#include "isacsim/params.hpp"
#include "isacsim/point_process.hpp"

namespace isacsim {

// assumption_matched reproduces the analytical model exactly: one event per
// outside-to-inside crossing of a sensing disk frozen at the start of each
// movement period, dwell = full geometric chord / speed, pauses contribute
// nothing. full keeps the event definition but measures what the analysis
// ignores: partial chords cut off by the waypoint, and pause time spent
// inside the (recomputed) disk at the arrival waypoint.
enum class Fidelity { kAssumptionMatched, kFull };

struct SimConfig {
    NetworkParams net;
    Window window;            // toroidal by default; {0,0} means "derive from intensities"
    int replications = 1;
    int periods_per_drv = 1;
    std::uint64_t seed = 0;
    Fidelity fidelity = Fidelity::kAssumptionMatched;
};

struct DwellEvent {
    std::uint32_t drv_index = 0;
    std::uint32_t transition_index = 0;
    double dwell = 0.0; // s
    bool qualifying = false;
};

// Everything one replication contributes, kept raw so aggregation can apply
// any PRI threshold without re-simulating.
struct RepResult {
    std::vector<DwellEvent> events;
    double drv_time = 0.0;  // summed over vehicles and periods, s
    std::uint32_t n_drv = 0;
    double rc_sum = 0.0;    // per-period sensing radii
    std::uint64_t rc_count = 0;
    std::uint32_t bs_resamples = 0;
};

struct SimReport {
    double empirical_xi = 0.0;   // qualifying events per second of wall time
    double xi_ci = 0.0;          // 95% half-width over replication means
    double empirical_xi_r = 0.0; // all events per second of wall time
    double xi_r_ci = 0.0;
    std::optional<double> empirical_p_dwell; // absent when no events occurred
    double p_dwell_ci = 0.0;
    std::optional<double> mean_rc; // absent when no radius samples exist
    double rc_ci = 0.0;
    std::uint64_t event_count = 0;
    std::uint64_t qualifying_count = 0;
    std::uint64_t rc_samples = 0;
    double sim_time = 0.0; // wall-clock seconds of simulated motion
    std::uint64_t seed = 0;
    int replications = 0;
    std::uint64_t drv_total = 0;
    std::uint32_t bs_resamples = 0;
};

struct SegmentDwell {
    double dwell = 0.0;     // s
    bool ends_inside = false;
};

/// Dwell of one straight relative segment against a static disk. Returns a
/// value only for an entering crossing (segment start strictly outside, the
/// boundary reached within the segment). Tangent grazes do not count.
std::optional<SegmentDwell> segment_disk_dwell(Point2 seg_start, Point2 seg_end,
                                               const Circle& disk, double speed,
                                               Fidelity fidelity = Fidelity::kAssumptionMatched);

/// One seeded replication: static BS pattern, PPP-deployed vehicles, the
/// target fixed at the window center, periods_per_drv movement periods per
/// vehicle. Deterministic for (cfg.seed, rep_index) under any scheduling.
RepResult run_replication(const SimConfig& cfg, int rep_index);

/// All replications, farmed over worker threads. Output is identical for any
/// worker count: streams are keyed per (seed, replication, vehicle, period)
/// and results are reduced in replication order.
std::vector<RepResult> run_batch(const SimConfig& cfg, int threads = 0);

/// Pooled estimates plus normal-approximation CIs over replication means.
/// tau is the PRI threshold applied to the recorded dwell times.
SimReport aggregate(const SimConfig& cfg, const std::vector<RepResult>& batch, double tau);

SimReport estimate(const SimConfig& cfg, int threads = 0);

/// Window actually used by the engine (the configured one, or the derived
/// default square when unset).
Window effective_window(const SimConfig& cfg);

} // namespace isacsim
