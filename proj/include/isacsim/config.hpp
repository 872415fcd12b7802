#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isacsim/montecarlo.hpp"
#include "isacsim/params.hpp"

namespace isacsim {

// Physical quantities in the config file are strings with an explicit unit
// suffix ("46 dBm", "1 per_km2", "1.4 m_per_s"); bare numbers are rejected.
// Dimensionless values (path-loss exponents, counts) are plain numbers.
enum class Quantity {
    kPower,      // W, mW, dBm
    kGain,       // dBi, linear
    kLength,     // m, km
    kIntensity,  // per_m2, per_km2
    kSpeed,      // m_per_s, km_per_h
    kTime,       // s, ms
    kArea,       // m2, km2
};

/// Parses "<number> <suffix>" into SI units. Throws ConfigError for bare
/// numbers, unknown suffixes or malformed text.
double parse_quantity(const std::string& text, Quantity kind);

struct CoverageCase {
    std::string name;
    double alpha_b = 4.0;
    double alpha_v = 4.0;
    double d_v = 500.0; // m
    int n_angles = 720;
    std::optional<Point2> expansion_point; // default: the DRV position
};

struct SweepSpec {
    std::string parameter; // drv_intensity | pri | speed
    double min = 0.0;      // SI
    double max = 0.0;      // SI
    int steps = 2;
    bool log_scale = false;
};

struct ExperimentConfig {
    NetworkParams net;
    int replications = 1000;
    int periods_per_drv = 100;
    Fidelity fidelity = Fidelity::kAssumptionMatched;
    std::optional<Window> window; // absent: derived from the intensities
    std::uint64_t seed = 20250811;
    std::string output_dir = "out";
    std::vector<CoverageCase> coverage_cases;
    SweepSpec sweep;
    std::uint64_t config_hash = 0; // FNV-1a of the canonical JSON text

    SimConfig sim_config() const;
};

/// Built-in defaults (the documented default experiment).
ExperimentConfig default_config();

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

/// Grid of swept values (linear or log spacing, endpoints included).
std::vector<double> sweep_values(const SweepSpec& sweep);

} // namespace isacsim
