#include "gswsp/model.hpp"

#include <cmath>
#include <sstream>

#include "gswsp/errors.hpp"

namespace gswsp {

PotentialParams PotentialParams::repulsive(double eps_plus) {
    PotentialParams p;
    p.eps_plus = eps_plus;
    return p;
}

PotentialParams PotentialParams::attractive(double eps_plus) {
    PotentialParams p;
    p.w = -2.0 * p.m0c2;
    p.eps_plus = eps_plus;
    return p;
}

std::string Violation::message() const {
    std::ostringstream os;
    os.precision(12);
    os << field << ": requires " << bound << " (got " << value << ")";
    return os.str();
}

std::vector<Violation> validate_params(const PotentialParams& p) {
    std::vector<Violation> out;
    auto check = [&](bool ok, const char* field, const char* bound, double value) {
        if (!ok) out.push_back({field, bound, value});
    };
    auto finite = [](double v) { return std::isfinite(v); };

    check(finite(p.m0c2) && p.m0c2 > 0.0, "m0c2", "m0c2 > 0", p.m0c2);
    check(finite(p.v0) && p.v0 > 0.0, "V0", "V0 > 0", p.v0);
    check(finite(p.w), "W", "W finite", p.w);
    check(finite(p.alpha) && p.alpha > 0.0, "alpha", "alpha > 0", p.alpha);
    check(finite(p.l) && p.l > 0.0, "L", "L > 0", p.l);
    check(finite(p.hbar_c) && p.hbar_c > 0.0, "hbar_c", "hbar_c > 0", p.hbar_c);
    check(finite(p.eps_plus) && p.eps_plus >= 0.0, "eps_plus", "eps_plus >= 0", p.eps_plus);
    check(finite(p.eps_plus) && p.eps_plus < p.m0c2, "eps_plus", "eps_plus < m0c2",
          p.eps_plus);
    if (p.v_cr_guard) {
        check(p.v0 < *p.v_cr_guard, "V0", "V0 < V_cr", p.v0);
    }
    return out;
}

void require_valid(const PotentialParams& p) {
    const auto violations = validate_params(p);
    if (violations.empty()) return;
    std::string msg = "invalid potential parameters:";
    for (const auto& v : violations) msg += "\n  " + v.message();
    throw ConfigError(msg);
}

double potential_at(const PotentialParams& p, double x) {
    // Left branch at x == 0; both branches agree there.
    const double e = x <= 0.0 ? std::exp(-p.alpha * (x + p.l)) : std::exp(p.alpha * (x - p.l));
    const double d = 1.0 + e;
    return -p.v0 / d + p.w * e / (d * d);
}

EnergyInterval allowed_interval(const PotentialParams& p) {
    const double shifted_mass = p.m0c2 - p.eps_plus;
    EnergyInterval iv{std::max(-shifted_mass, shifted_mass - 2.0 * p.v0), shifted_mass};
    if (!(iv.lower < iv.upper)) {
        std::ostringstream os;
        os << "allowed energy interval is empty: [" << iv.lower << ", " << iv.upper << "]";
        throw IntervalError(os.str());
    }
    return iv;
}

DimensionlessSet derived_quantities(const PotentialParams& p, double energy) {
    const EnergyInterval iv = allowed_interval(p);
    if (!(energy - iv.lower >= 0.5 * kEndpointMargin &&
          iv.upper - energy >= 0.5 * kEndpointMargin)) {
        std::ostringstream os;
        os.precision(12);
        os << "energy " << energy << " MeV outside allowed interval (" << iv.lower << ", "
           << iv.upper << ") with margin " << kEndpointMargin;
        throw IntervalError(os.str());
    }

    DimensionlessSet d;
    d.energy = energy;
    const double s = p.eps_plus - p.m0c2;
    const double scale = p.alpha * p.alpha * p.hbar_c * p.hbar_c;
    d.epsilon2 = -(energy * energy - s * s) / scale;
    d.beta2 = 2.0 * (energy - s) * (p.v0 - p.w) / scale;
    d.gamma2 = 2.0 * (energy - s) * p.w / scale;

    const double k_rad = -(energy - p.eps_plus + p.m0c2) * (energy + p.eps_plus - p.m0c2);
    const double kappa_rad =
        (energy - p.eps_plus + p.m0c2) * (energy + p.eps_plus - p.m0c2 + 2.0 * p.v0);
    if (!(k_rad > 0.0 && kappa_rad > 0.0)) {
        throw DomainError("derived_quantities: negative wave-number radicand inside interval");
    }
    d.k = std::sqrt(k_rad) / p.hbar_c;
    d.kappa = std::sqrt(kappa_rad) / p.hbar_c;
    d.mu = d.k / p.alpha;
    d.nu = Complex{0.0, d.kappa / p.alpha};
    d.theta = 0.5 - std::sqrt(Complex{0.25 - d.gamma2, 0.0});
    d.t0 = 1.0 / (1.0 + std::exp(-p.alpha * p.l));
    return d;
}

}  // namespace gswsp
