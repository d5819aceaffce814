#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gswsp/specfun.hpp"

namespace gswsp {

// CODATA value; used whenever a configuration does not override it.
inline constexpr double kDefaultHbarC = 197.3269804;  // MeV fm
inline constexpr double kKaonRestEnergy = 497.648;    // MeV

// Keeps trial energies away from the interval edges where k or kappa -> 0.
inline constexpr double kEndpointMargin = 1e-6;  // MeV

/// Generalized symmetric Woods-Saxon well plus the spin-symmetric
/// Klein-Gordon constants. Energies in MeV, lengths in fm.
struct PotentialParams {
    double m0c2 = kKaonRestEnergy;
    double v0 = kKaonRestEnergy / 2.0;
    double w = 2.0 * kKaonRestEnergy;  // > 0 repulsive, < 0 attractive surface
    double alpha = 1.0;                // fm^-1
    double l = 6.0;                    // fm
    double eps_plus = 0.0;
    double hbar_c = kDefaultHbarC;
    std::optional<double> v_cr_guard;

    static PotentialParams repulsive(double eps_plus = 0.0);
    static PotentialParams attractive(double eps_plus = 0.0);
};

struct Violation {
    std::string field;
    std::string bound;
    double value = 0.0;

    std::string message() const;
};

std::vector<Violation> validate_params(const PotentialParams& p);

/// Throws ConfigError listing every violation when the parameters are invalid.
void require_valid(const PotentialParams& p);

double potential_at(const PotentialParams& p, double x);

/// Open energy interval in which both wave numbers are real and positive.
struct EnergyInterval {
    double lower = 0.0;
    double upper = 0.0;

    double length() const { return upper - lower; }
    bool contains(double e) const { return e > lower && e < upper; }
};

EnergyInterval allowed_interval(const PotentialParams& p);

/// Every quantity the matching conditions need at one trial energy.
struct DimensionlessSet {
    double energy = 0.0;
    double epsilon2 = 0.0;
    double beta2 = 0.0;
    double gamma2 = 0.0;
    double mu = 0.0;
    Complex nu;     // i kappa / alpha
    Complex theta;  // 1/2 - sqrt(1/4 - gamma2)
    double k = 0.0;
    double kappa = 0.0;
    double t0 = 0.0;
};

DimensionlessSet derived_quantities(const PotentialParams& p, double energy);

}  // namespace gswsp
