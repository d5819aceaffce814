#pragma once

#include <string_view>
#include <vector>

#include "gswsp/model.hpp"

namespace gswsp {

enum class Parity { even, odd };

inline std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

inline Parity parity_of(int n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

/// Scheduling for data-parallel energy sweeps. Both policies produce
/// bit-identical results; serial is the reference implementation.
enum class Exec { serial, parallel };

struct EnergyLevel {
    int n = 0;  // node count
    double energy = 0.0;
    Parity branch = Parity::even;
    double residual_abs = 0.0;
    bool nodes_verified = false;
};

struct Spectrum {
    PotentialParams params;
    std::vector<EnergyLevel> levels;  // ascending in energy and in n
};

struct StepSize {
    int n = 0;          // lower level
    double delta = 0.0; // E_{n+1} - E_n, MeV
};

/// Differences between consecutive levels. Throws DomainError for fewer
/// than two levels.
std::vector<StepSize> step_sizes(const Spectrum& s);

/// Uniform grid from lower + margin to upper - margin; the upper end point
/// is always included.
std::vector<double> energy_grid(const EnergyInterval& iv, double step);

}  // namespace gswsp
