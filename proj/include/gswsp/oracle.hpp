#pragma once

#include <vector>

#include "gswsp/model.hpp"
#include "gswsp/spectrum.hpp"

namespace gswsp {

struct OracleGrid {
    double x_max = 21.0;  // fm
    int n_points = 20001;
    double match_point = 0.0;

    /// x_max = L + 15/alpha with the default point count.
    static OracleGrid for_params(const PotentialParams& p);
};

std::vector<std::string> validate_grid(const OracleGrid& g, const PotentialParams& p);

/// psi'' + Q psi = 0 with Q in fm^-2.
double effective_q(const PotentialParams& p, double energy, double x);

struct ShotResult {
    double wronskian = 0.0;  // normalized, in [-1, 1]
    int left_nodes = 0;
    int right_nodes = 0;
    bool rescaled = false;
    // Values at the match point.
    double psi_left = 0.0, dpsi_left = 0.0;
    double psi_right = 0.0, dpsi_right = 0.0;
    // Samples one grid step either side of the match point.
    double psi_left_inner = 0.0, psi_right_inner = 0.0;
};

/// Two-sided RK4 shooting on a fixed grid. The potential is tabulated once at
/// every half step so repeated shots only pay for the integration.
class Shooter {
public:
    Shooter(const PotentialParams& p, const OracleGrid& g);

    ShotResult shoot(double energy) const;

    const PotentialParams& params() const { return params_; }
    const OracleGrid& grid() const { return grid_; }

private:
    PotentialParams params_;
    OracleGrid grid_;
    double h_ = 0.0;
    int match_index_ = 0;
    std::vector<double> v_half_;  // V at x_max * (-1 + j / (n - 1)), j = 0 .. 2(n - 1)
};

ShotResult shoot_mismatch(const PotentialParams& p, double energy, const OracleGrid& g);

struct OracleOptions {
    double step = 0.25;  // MeV
    double tol = 1e-6;   // MeV, final bracket width
    int max_iterations = 100;
    Exec exec = Exec::parallel;
};

/// Eigenvalues from sign changes of the matching Wronskian, refined by
/// bisection; n is the node count of the stitched eigenfunction.
Spectrum oracle_spectrum(const PotentialParams& p, const OracleGrid& g,
                         const OracleOptions& opts = {});

}  // namespace gswsp
