#include "gswsp/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gswsp/errors.hpp"

namespace gswsp {

namespace {

constexpr double kPoleTol = 1e-12;
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

std::string describe(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

Complex log_gamma_lanczos(Complex z) {
    z -= 1.0;
    Complex sum = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const Complex t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(sum);
}

// log sin(w) without overflow for large |Im w|.
Complex log_sin(Complex w) {
    const Complex i{0.0, 1.0};
    if (w.imag() >= 0.0) {
        return -i * w + std::log((std::exp(2.0 * i * w) - 1.0) / (2.0 * i));
    }
    return i * w + std::log((1.0 - std::exp(-2.0 * i * w)) / (2.0 * i));
}

}  // namespace

bool is_gamma_pole(Complex z) {
    if (std::abs(z.imag()) > kPoleTol || z.real() > kPoleTol) {
        return false;
    }
    return std::abs(z.real() - std::round(z.real())) <= kPoleTol;
}

Complex log_gamma(Complex z) {
    if (is_gamma_pole(z)) {
        throw PoleError("log_gamma: argument " + describe(z) + " is a pole of Gamma");
    }
    if (z.real() < 0.5) {
        return std::log(std::numbers::pi) - log_sin(std::numbers::pi * z) -
               log_gamma_lanczos(1.0 - z);
    }
    return log_gamma_lanczos(z);
}

Complex gamma_ratio_product(std::span<const Complex> numerators,
                            std::span<const Complex> denominators) {
    for (const Complex& z : numerators) {
        if (is_gamma_pole(z)) {
            throw PoleError("gamma_ratio_product: numerator " + describe(z) +
                            " is a pole of Gamma");
        }
    }
    for (const Complex& z : denominators) {
        if (is_gamma_pole(z)) {
            return {0.0, 0.0};
        }
    }
    Complex log_sum = 0.0;
    for (const Complex& z : numerators) log_sum += log_gamma(z);
    for (const Complex& z : denominators) log_sum -= log_gamma(z);

    static const double max_log = std::log(std::numeric_limits<double>::max());
    if (log_sum.real() > max_log) {
        throw OverflowError("gamma_ratio_product: log magnitude " +
                            std::to_string(log_sum.real()) + " exceeds double range");
    }
    return std::exp(log_sum);
}

Complex hyp2f1(Complex a, Complex b, Complex c, double x, const SeriesControl& ctrl) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw DomainError("hyp2f1: argument x = " + std::to_string(x) +
                          " outside [0, 1)");
    }
    if (is_gamma_pole(c)) {
        throw PoleError("hyp2f1: parameter c = " + describe(c) +
                        " is a nonpositive integer");
    }
    if (ctrl.max_terms < 1 || !(ctrl.rel_tol > 0.0 && ctrl.rel_tol < 1.0)) {
        throw DomainError("hyp2f1: invalid series control");
    }
    if (x == 0.0) {
        return {1.0, 0.0};
    }

    Complex term = 1.0;
    Complex sum = 1.0;
    int small_in_a_row = 0;
    for (int n = 0; n < ctrl.max_terms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
        sum += term;
        if (term == 0.0) {
            return sum;  // terminating series
        }
        if (std::abs(term) < ctrl.rel_tol * std::abs(sum)) {
            if (++small_in_a_row == 2) {
                return sum;
            }
        } else {
            small_in_a_row = 0;
        }
    }
    throw ConvergenceError("hyp2f1: series did not converge in " +
                           std::to_string(ctrl.max_terms) + " terms at x = " +
                           std::to_string(x));
}

Complex unit_power(double base, Complex exponent) {
    if (!(base > 0.0)) {
        throw DomainError("unit_power: base must be positive, got " + std::to_string(base));
    }
    return std::exp(exponent * std::log(base));
}

}  // namespace gswsp
