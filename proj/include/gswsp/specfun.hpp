#pragma once

#include <complex>
#include <span>

namespace gswsp {

using Complex = std::complex<double>;

struct SeriesControl {
    int max_terms = 5000;
    double rel_tol = 1e-14;
};

/// Principal-branch log Gamma for complex arguments.
///
/// Lanczos (g = 7, nine coefficients) on Re(z) >= 1/2 and the reflection
/// formula elsewhere. Throws PoleError when z lies within 1e-12 of a
/// nonpositive integer.
Complex log_gamma(Complex z);

/// True when z sits on a pole of Gamma (nonpositive integer, 1e-12 slack).
bool is_gamma_pole(Complex z);

/// prod Gamma(numerators) / prod Gamma(denominators), evaluated in log space.
/// A denominator at a pole makes the product exactly zero.
Complex gamma_ratio_product(std::span<const Complex> numerators,
                            std::span<const Complex> denominators);

/// Gauss series 2F1(a, b; c; x) for real 0 <= x < 1.
Complex hyp2f1(Complex a, Complex b, Complex c, double x,
               const SeriesControl& ctrl = {});

/// base^exponent = exp(exponent * ln base) for base > 0.
Complex unit_power(double base, Complex exponent);

}  // namespace gswsp
