#pragma once

// Orchestration behind the command-line tool: single runs, flavor
// comparisons, and convergence studies, each writing snapshots, a step log,
// and a flat key = value diagnostics report into an output directory.
// Return values are process exit codes: 0 success, 2 config error,
// 3 admissibility/integration abort, 4 I/O error.

#include <string>
#include <vector>

#include "ldcu/config.hpp"

namespace ldcu {

int cmd_run(const RunConfig& cfg, const std::string& out_dir);

/// Run every flavor on an identical configuration and write a joint report
/// with the per-flavor metrics side by side.
int cmd_compare(const RunConfig& cfg, const std::vector<SchemeFlavor>& flavors,
                const std::string& out_dir);

/// Run a problem with a known exact (or fine-reference) solution at each
/// resolution; report L1 errors and successive rates log2(e_i / e_{i+1}).
int cmd_convergence(const RunConfig& cfg, const std::vector<int>& resolutions,
                    const std::string& out_dir);

} // namespace ldcu
