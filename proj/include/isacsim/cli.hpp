#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isacsim/config.hpp"
#include "isacsim/table.hpp"

namespace isacsim {

// Output builders are separated from the commands so tests (and the
// determinism criterion) can compare rendered bytes without touching disk.

struct CoverageOutputs {
    ResultTable boundaries; // case, method, theta, x, y
    ResultTable summary;    // case, method, area_m2, iou, max_residual
    std::vector<std::pair<std::string, std::string>> svgs; // filename -> content
    std::string log;        // human-readable area/IoU lines
};

CoverageOutputs build_coverage_outputs(const ExperimentConfig& cfg);

struct SweepOutputs {
    ResultTable table; // swept_value, xi_analytic, xi_r_analytic, p_dwell_analytic,
                       // xi_empirical, ci_low, ci_high, events
    std::string svg;
    std::string log;
};

SweepOutputs build_drr_sweep(const ExperimentConfig& cfg, int threads = 0);

int cmd_coverage(const ExperimentConfig& cfg);
int cmd_drr_sweep(const ExperimentConfig& cfg, int threads = 0);
int cmd_validate(const ExperimentConfig& cfg, int threads = 0);

} // namespace isacsim
