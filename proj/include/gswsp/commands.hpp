#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "gswsp/analytic.hpp"
#include "gswsp/config.hpp"
#include "gswsp/spectrum.hpp"

namespace gswsp {

// Process exit codes; a stable contract of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitConvergence = 3,
    kExitMissingLevel = 4,
    kExitVerifyFailed = 5,
};

inline constexpr double kDefaultVerifyTolerance = 0.5;  // MeV

SpectrumOptions spectrum_options(const RunConfig& cfg);

struct VerifyEntry {
    double eps_plus = 0.0;
    int n = 0;
    double reference_energy = 0.0;
    std::optional<double> computed_energy;
    bool pass = false;
};

struct VerifyCount {
    double eps_plus = 0.0;
    int reference_count = 0;
    int computed_count = 0;
    bool pass = false;
};

struct VerifyReport {
    int table_id = 0;
    double tolerance = kDefaultVerifyTolerance;
    std::vector<VerifyEntry> entries;
    std::vector<VerifyCount> counts;
    std::vector<Spectrum> spectra;  // one per table column
    bool count_check = false;
    bool pass = false;
};

/// Recomputes every column of a reference table. Throws ConfigError when
/// the configuration does not describe the table's scenario.
VerifyReport run_verification(const RunConfig& cfg, int table_id, double tolerance);

std::string verify_report_json(const VerifyReport& report);

struct WavefunctionRange {
    std::optional<double> x_min;
    std::optional<double> x_max;
    double dx = 0.01;
};

int cmd_interval(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& cfg, std::optional<Parity> branch_filter, std::ostream& out,
                 std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::span<const double> eps_values, std::ostream& out,
              std::ostream& err);
int cmd_wavefunction(const RunConfig& cfg, int n, const WavefunctionRange& range,
                     std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, int table_id, double tolerance, std::ostream& out,
               std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace gswsp
