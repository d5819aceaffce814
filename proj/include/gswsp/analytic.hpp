#pragma once

#include <vector>

#include "gswsp/model.hpp"
#include "gswsp/spectrum.hpp"

namespace gswsp {

/// Gamma-ratio factors (S) and 2F1 values at 1 - t0 (N) obtained by
/// continuing the left solution and its derivative to x = 0.
struct MatchTerms {
    Complex s1, s2, s3, s4;
    Complex n1, n2, n3, n4;
    Complex m1;  // 2F1(a, b; 1 + 2mu; t0)
    Complex m3;  // 2F1(a + 1, b + 1; 2 + 2mu; t0)
};

MatchTerms match_terms(const DimensionlessSet& dq, const SeriesControl& ctrl = {});

/// Real projection of a matching condition plus the relative size of the
/// imaginary part that the projection discards.
struct Residual {
    double g = 0.0;
    double im_leak = 0.0;
};

/// Continuity of the wavefunction at x = 0 (odd states, D3 = -D1).
Residual odd_residual(const DimensionlessSet& dq, const MatchTerms& mt);

/// Continuity of the derivative at x = 0 (even states, D3 = D1).
Residual even_residual(const DimensionlessSet& dq, const MatchTerms& mt);

Residual residual_at(const PotentialParams& p, Parity branch, double energy);

struct ScanOptions {
    double step = 0.25;          // MeV
    double tol = 1e-8;           // MeV, final Newton update
    double accept_tol = 1e-9;    // |g| / bracket scale
    double derivative_h = 1e-4;  // MeV
    int max_iterations = 100;
    Exec exec = Exec::parallel;
};

struct Root {
    double energy = 0.0;
    double rel_residual = 0.0;
};

/// Sign-change scan of the branch residual over the allowed interval with
/// Newton refinement inside each bracket (bisection when Newton leaves it).
std::vector<Root> scan_roots(const PotentialParams& p, Parity branch,
                             const ScanOptions& opts = {});

struct SpectrumOptions {
    ScanOptions scan;
    int node_grid = 4001;
};

Spectrum build_spectrum(const PotentialParams& p, const SpectrumOptions& opts = {});

}  // namespace gswsp
