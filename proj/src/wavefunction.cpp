#include "gswsp/wavefunction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gswsp/errors.hpp"

namespace gswsp {

namespace {

// Below this the Gauss series is summed directly; above it the left solution
// is continued through the 1 - z expansion used by the matching conditions.
constexpr double kSeriesSwitch = 0.5;

}  // namespace

Wavefunction::Wavefunction(const PotentialParams& p, const WavefunctionSpec& spec)
    : params_(p), spec_(spec), dq_(derived_quantities(p, spec.energy)) {
    const double mu = dq_.mu;
    const Complex nu = dq_.nu;
    const Complex th = dq_.theta;
    a_ = mu + th + nu;
    b_ = 1.0 + mu - th + nu;
    c_ = 1.0 + 2.0 * mu;
    const std::array<Complex, 2> num1{c_, -2.0 * nu};
    const std::array<Complex, 2> den1{1.0 + mu - th - nu, mu + th - nu};
    const std::array<Complex, 2> num2{c_, 2.0 * nu};
    const std::array<Complex, 2> den2{1.0 + mu - th + nu, mu + th + nu};
    s1_ = gamma_ratio_product(num1, den1);
    s2_ = gamma_ratio_product(num2, den2);

    // Reference amplitude: coarse scan of the well region.
    const double half = p.l + 4.0 / p.alpha;
    double amp = 0.0;
    for (double x : linspace(-half, 0.0, 401)) {
        amp = std::max(amp, std::abs(complex_value(x)));
    }
    ref_amplitude_ = amp > 0.0 ? amp : 1.0;
}

Complex Wavefunction::left_factor(double z, double one_minus_z) const {
    const double mu = dq_.mu;
    const Complex nu = dq_.nu;
    // (z - 1)^nu on the principal branch: log(z - 1) = ln(1 - z) + i pi.
    const Complex prefactor = std::pow(z, mu) *
                              std::exp(nu * Complex{std::log(one_minus_z), std::numbers::pi});
    Complex f;
    if (z <= kSeriesSwitch) {
        f = hyp2f1(a_, b_, c_, z);
    } else {
        f = s1_ * hyp2f1(a_, b_, 1.0 + 2.0 * nu, one_minus_z) +
            unit_power(one_minus_z, -2.0 * nu) * s2_ *
                hyp2f1(c_ - a_, c_ - b_, 1.0 - 2.0 * nu, one_minus_z);
    }
    return prefactor * f;
}

Complex Wavefunction::complex_value(double x) const {
    const double alpha = params_.alpha;
    const double l = params_.l;
    // z = 1 / (1 + e^u); both z and 1 - z are formed without cancellation.
    const double u = x <= 0.0 ? -alpha * (x + l) : alpha * (x - l);
    double z, w;
    if (u > 0.0) {
        const double e = std::exp(-u);
        z = e / (1.0 + e);
        w = 1.0 / (1.0 + e);
    } else {
        const double e = std::exp(u);
        z = 1.0 / (1.0 + e);
        w = e / (1.0 + e);
    }
    if (z == 0.0) return {0.0, 0.0};
    Complex v = spec_.d1 * left_factor(z, w);
    if (x > 0.0 && spec_.branch == Parity::odd) v = -v;
    return v;
}

double Wavefunction::operator()(double x) const {
    const Complex v = complex_value(x);
    if (std::abs(v.imag()) > kWavefunctionLeakTol * std::abs(spec_.d1) * ref_amplitude_) {
        std::ostringstream os;
        os.precision(10);
        os << "wavefunction imaginary leak " << std::abs(v.imag()) / ref_amplitude_
           << " at x = " << x << " fm, E = " << spec_.energy << " MeV";
        throw LeakError(os.str());
    }
    return v.real();
}

std::vector<double> Wavefunction::sample(std::span<const double> xs) const {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back((*this)(x));
    return out;
}

double wavefunction_at(const PotentialParams& p, const WavefunctionSpec& spec, double x) {
    return Wavefunction(p, spec)(x);
}

int node_count(const PotentialParams& p, const WavefunctionSpec& spec, int grid_n) {
    const double half = p.l + 12.0 / p.alpha;
    const auto xs = linspace(-half, half, grid_n);
    const auto psi = Wavefunction(p, spec).sample(xs);

    double peak = 0.0;
    for (double v : psi) peak = std::max(peak, std::abs(v));
    const double floor = 1e-10 * peak;

    int nodes = 0;
    int last_sign = 0;
    for (double v : psi) {
        if (std::abs(v) < floor) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++nodes;
        last_sign = sign;
    }
    return nodes;
}

double normalize(const PotentialParams& p, const WavefunctionSpec& spec, int grid_n) {
    const double half = p.l + 20.0 / p.alpha;
    const auto xs = linspace(-half, half, grid_n);
    WavefunctionSpec unit = spec;
    unit.d1 = 1.0;
    auto psi = Wavefunction(p, unit).sample(xs);
    for (double& v : psi) v *= v;
    return 1.0 / std::sqrt(trapezoid(xs, psi));
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> xs(static_cast<std::size_t>(std::max(n, 0)));
    if (n == 1) {
        xs[0] = a;
        return xs;
    }
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) xs[i] = a + i * h;
    if (n > 1) xs.back() = b;
    return xs;
}

double trapezoid(std::span<const double> xs, std::span<const double> ys) {
    double sum = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        sum += 0.5 * (xs[i] - xs[i - 1]) * (ys[i] + ys[i - 1]);
    }
    return sum;
}

}  // namespace gswsp
