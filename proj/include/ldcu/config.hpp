#pragma once

// Run configuration: a JSON document with defaults applied and unknown keys
// rejected. Scheme parameters default to theta = 1.3, cfl = 0.475,
// gamma = 1.4, epsilon = 1e-12.

#include <optional>
#include <string>
#include <vector>

#include "ldcu/problems.hpp"
#include "ldcu/scheme.hpp"

namespace ldcu {

struct RunConfig {
    std::string problem;
    SchemeFlavor scheme = SchemeFlavor::NEW;

    std::optional<int> nx, ny;
    std::optional<double> t_final;
    double cfl = 0.475;
    double theta = 1.3;
    double gamma = 1.4;
    double epsilon = 1e-12;
    std::optional<long long> max_steps;
    std::vector<double> snapshot_times;

    // diagnostics windows (optional)
    std::optional<std::pair<double, double>> tv_window;
    std::optional<std::pair<double, double>> overshoot_window;
    std::optional<double> overshoot_lo, overshoot_hi;

    // custom Riemann data (required iff problem == "custom_riemann")
    std::optional<Prim1> left, right;
    std::optional<double> split;
    std::optional<std::pair<double, double>> domain;
};

/// Parse and validate a JSON config document.
RunConfig parse_config(const std::string& json_text);

/// parse_config plus repeated `key=value` overrides of top-level scalars.
RunConfig parse_config(const std::string& json_text, const std::vector<std::string>& overrides);

RunConfig load_config_file(const std::string& path, const std::vector<std::string>& overrides);

/// Instantiate the configured problem with overrides (t_final, gamma, custom
/// Riemann data) applied. Also validates problem-specific requirements.
AnyProblem build_problem(const RunConfig& cfg);

SchemeConfig scheme_config(const RunConfig& cfg);

} // namespace ldcu
