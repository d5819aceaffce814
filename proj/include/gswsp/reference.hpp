#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace gswsp {

struct ReferenceRow {
    double eps_plus = 0.0;  // MeV
    int n = 0;
    double energy = 0.0;    // MeV
};

/// Published spectra, embedded read-only. Table 1: repulsive surface term,
/// seven eps+ columns. Table 2: attractive surface term, eps+ = 0 and 50.
struct ReferenceTable {
    int id = 0;
    std::vector<ReferenceRow> rows;

    /// Distinct eps+ values in order of first appearance.
    std::vector<double> eps_values() const;
    std::vector<ReferenceRow> rows_for(double eps_plus) const;
};

/// Throws ConfigError for ids other than 1 and 2.
const ReferenceTable& reference_table(int id);

std::string_view reference_csv(int id);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace gswsp
