#pragma once

#include <span>
#include <vector>

#include "gswsp/model.hpp"
#include "gswsp/spectrum.hpp"

namespace gswsp {

struct WavefunctionSpec {
    double energy = 0.0;
    double d1 = 1.0;
    Parity branch = Parity::even;
};

inline constexpr double kWavefunctionLeakTol = 1e-8;

/// Piecewise bound-state solution built from the decaying left solution and
/// its mirror image. Construction precomputes the energy-dependent constants
/// and a reference amplitude used by the imaginary-leak assertion.
class Wavefunction {
public:
    Wavefunction(const PotentialParams& p, const WavefunctionSpec& spec);

    /// Complex value before taking the real part (imaginary part ~ 0).
    Complex complex_value(double x) const;

    /// Real wavefunction; throws LeakError if the discarded imaginary part
    /// exceeds kWavefunctionLeakTol of the reference amplitude.
    double operator()(double x) const;

    std::vector<double> sample(std::span<const double> xs) const;

    double reference_amplitude() const { return ref_amplitude_; }

private:
    Complex left_factor(double z, double one_minus_z) const;

    PotentialParams params_;
    WavefunctionSpec spec_;
    DimensionlessSet dq_;
    Complex a_, b_, c_;
    Complex s1_, s2_;
    double ref_amplitude_ = 1.0;
};

double wavefunction_at(const PotentialParams& p, const WavefunctionSpec& spec, double x);

/// Sign changes on a uniform grid over +-(L + 12/alpha), ignoring samples
/// below 1e-10 of the maximum magnitude.
int node_count(const PotentialParams& p, const WavefunctionSpec& spec, int grid_n);

/// D1 making the trapezoidal integral of psi^2 over +-(L + 20/alpha) unity.
double normalize(const PotentialParams& p, const WavefunctionSpec& spec, int grid_n);

std::vector<double> linspace(double a, double b, int n);

double trapezoid(std::span<const double> xs, std::span<const double> ys);

}  // namespace gswsp
