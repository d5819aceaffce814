#pragma once

#include <span>
#include <vector>

#include "gswsp/model.hpp"
#include "gswsp/oracle.hpp"
#include "gswsp/spectrum.hpp"

// Data-parallel sweeps over trial energies. Every sweep has a serial
// reference and an OpenMP version; the two must agree bit for bit.
namespace gswsp::kernels {

std::vector<double> residuals_serial(const PotentialParams& p, Parity branch,
                                     std::span<const double> energies);
std::vector<double> residuals_omp(const PotentialParams& p, Parity branch,
                                  std::span<const double> energies);
std::vector<double> residuals(const PotentialParams& p, Parity branch,
                              std::span<const double> energies, Exec exec);

std::vector<double> wronskians_serial(const Shooter& shooter, std::span<const double> energies);
std::vector<double> wronskians_omp(const Shooter& shooter, std::span<const double> energies);
std::vector<double> wronskians(const Shooter& shooter, std::span<const double> energies,
                               Exec exec);

}  // namespace gswsp::kernels
