#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gswsp/model.hpp"
#include "gswsp/oracle.hpp"

namespace gswsp {

/// Everything a CLI run needs. Parsed from flat `key = value` text; keys not
/// present keep the defaults, which describe the repulsive kaon setup.
struct RunConfig {
    PotentialParams params;
    double scan_step = 0.25;  // MeV
    double tol = 1e-8;        // MeV
    std::optional<double> x_max;  // fm; L + 15/alpha when absent
    int grid_points = 20001;
    std::string output;

    OracleGrid oracle_grid() const;
};

/// Throws ConfigError listing every problem found (syntax, unknown keys,
/// parameter invariants).
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

/// Re-checks the invariants of an already-built config (after CLI overrides).
void validate_config(const RunConfig& cfg);

}  // namespace gswsp
