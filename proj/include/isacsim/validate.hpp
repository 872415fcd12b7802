#pragma once

#include <string>
#include <vector>

#include "isacsim/config.hpp"

namespace isacsim {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
};

struct ValidationReport {
    std::vector<CriterionResult> criteria;
    std::string divergence_report; // expansion vs published conic grouping
    bool all_pass = false;
    std::string text; // full deterministic report (no timestamps)
};

/// Runs the full acceptance suite. The Monte-Carlo seed comes from the
/// config; the physical grid is the built-in default deployment, so the
/// checked anchor values stay meaningful regardless of user overrides.
ValidationReport run_acceptance(const ExperimentConfig& cfg, int threads = 0);

} // namespace isacsim
