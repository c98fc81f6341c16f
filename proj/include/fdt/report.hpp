#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fdt/run_config.hpp"

namespace fdt {

// Rendered output files (name -> content) for one run: coefficient table,
// solution grid, residual report and convergence report, in the formats the
// config selects. Deterministic: identical config, identical bytes.
std::vector<std::pair<std::string, std::string>> render_reports(const RunConfig& cfg);

// Renders and writes everything under cfg.output_dir, creating it if needed.
// Nothing is written until all tables exist; on a write failure the files
// already written are removed. Returns the process exit status.
int run(const RunConfig& cfg);

}  // namespace fdt
