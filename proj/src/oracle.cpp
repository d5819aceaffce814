#include "gswsp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include "gswsp/errors.hpp"
#include "gswsp/kernels.hpp"

namespace gswsp {

namespace {

constexpr double kSeed = 1e-12;
constexpr double kRescaleAt = 1e200;
constexpr double kRescaleBy = 1e-200;

}  // namespace

OracleGrid OracleGrid::for_params(const PotentialParams& p) {
    OracleGrid g;
    g.x_max = p.l + 15.0 / p.alpha;
    return g;
}

std::vector<std::string> validate_grid(const OracleGrid& g, const PotentialParams& p) {
    std::vector<std::string> out;
    const double min_extent = p.l + 15.0 / p.alpha;
    if (!(g.x_max >= min_extent - 1e-12)) {
        out.push_back("x_max: requires x_max >= L + 15/alpha = " + std::to_string(min_extent));
    }
    if (g.n_points < 20000) out.push_back("n_points: requires n_points >= 20000");
    if (g.n_points % 2 == 0) out.push_back("n_points: requires an odd point count");
    if (!(std::abs(g.match_point) < g.x_max)) {
        out.push_back("match_point: requires |match_point| < x_max");
    } else if (g.n_points > 1) {
        const double h = 2.0 * g.x_max / (g.n_points - 1);
        const double idx = (g.match_point + g.x_max) / h;
        if (std::abs(idx - std::round(idx)) > 1e-9) {
            out.push_back("match_point: requires a point on the grid");
        }
    }
    return out;
}

double effective_q(const PotentialParams& p, double energy, double x) {
    const double s = p.eps_plus - p.m0c2;
    return (energy * energy - s * s - 2.0 * potential_at(p, x) * (energy - s)) /
           (p.hbar_c * p.hbar_c);
}

Shooter::Shooter(const PotentialParams& p, const OracleGrid& g) : params_(p), grid_(g) {
    require_valid(p);
    const auto problems = validate_grid(g, p);
    if (!problems.empty()) {
        std::string msg = "invalid oracle grid:";
        for (const auto& s : problems) msg += "\n  " + s;
        throw ConfigError(msg);
    }
    h_ = 2.0 * g.x_max / (g.n_points - 1);
    match_index_ = static_cast<int>(std::lround((g.match_point + g.x_max) / h_));
    const std::size_t half_steps = 2 * static_cast<std::size_t>(g.n_points - 1);
    v_half_.resize(half_steps + 1);
    for (std::size_t j = 0; j <= half_steps; ++j) {
        v_half_[j] = potential_at(p, -g.x_max + 0.5 * h_ * static_cast<double>(j));
    }
}

ShotResult Shooter::shoot(double energy) const {
    const PotentialParams& p = params_;
    const EnergyInterval iv = allowed_interval(p);
    if (!(iv.contains(energy))) {
        std::ostringstream os;
        os.precision(12);
        os << "shoot: energy " << energy << " MeV outside (" << iv.lower << ", " << iv.upper
           << ")";
        throw IntervalError(os.str());
    }
    const double s = p.eps_plus - p.m0c2;
    const double inv_hc2 = 1.0 / (p.hbar_c * p.hbar_c);
    const double q0 = (energy * energy - s * s) * inv_hc2;
    const double q1 = 2.0 * (energy - s) * inv_hc2;
    const double k = std::sqrt(-(energy - p.eps_plus + p.m0c2) * (energy + p.eps_plus - p.m0c2)) /
                     p.hbar_c;
    auto q = [&](std::size_t j) { return q0 - q1 * v_half_[j]; };

    ShotResult r;
    // One RK4 step of (psi, dpsi) over dx, potential samples at half-step
    // indices j0, j0 + dj, j0 + 2 dj.
    auto rk4 = [&](double& psi, double& dpsi, double dx, std::size_t j0, std::ptrdiff_t dj) {
        const double qa = q(j0);
        const double qb = q(static_cast<std::size_t>(static_cast<std::ptrdiff_t>(j0) + dj));
        const double qc = q(static_cast<std::size_t>(static_cast<std::ptrdiff_t>(j0) + 2 * dj));
        const double k1y = dpsi, k1v = -qa * psi;
        const double k2y = dpsi + 0.5 * dx * k1v, k2v = -qb * (psi + 0.5 * dx * k1y);
        const double k3y = dpsi + 0.5 * dx * k2v, k3v = -qb * (psi + 0.5 * dx * k2y);
        const double k4y = dpsi + dx * k3v, k4v = -qc * (psi + dx * k3y);
        psi += dx / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        dpsi += dx / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if (std::abs(psi) > kRescaleAt || std::abs(dpsi) > kRescaleAt) {
            psi *= kRescaleBy;
            dpsi *= kRescaleBy;
            r.rescaled = true;
        }
    };
    auto sign_of = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };

    // Left: x_0 = -x_max up to the match point.
    {
        double psi = kSeed, dpsi = k * kSeed;
        int last = sign_of(psi);
        for (int i = 0; i < match_index_; ++i) {
            rk4(psi, dpsi, h_, 2 * static_cast<std::size_t>(i), 1);
            if (i + 1 < match_index_) {
                const int sg = sign_of(psi);
                if (sg != 0 && sg != last) {
                    ++r.left_nodes;
                    last = sg;
                }
                if (i + 2 == match_index_) r.psi_left_inner = psi;
            }
        }
        r.psi_left = psi;
        r.dpsi_left = dpsi;
    }
    // Right: x_{N-1} = +x_max down to the match point.
    {
        const int last_index = grid_.n_points - 1;
        double psi = kSeed, dpsi = -k * kSeed;
        int last = sign_of(psi);
        for (int i = last_index; i > match_index_; --i) {
            rk4(psi, dpsi, -h_, 2 * static_cast<std::size_t>(i), -1);
            if (i - 1 > match_index_) {
                const int sg = sign_of(psi);
                if (sg != 0 && sg != last) {
                    ++r.right_nodes;
                    last = sg;
                }
                if (i - 2 == match_index_) r.psi_right_inner = psi;
            }
        }
        r.psi_right = psi;
        r.dpsi_right = dpsi;
    }

    const double amp_l = std::hypot(r.psi_left, r.dpsi_left / k);
    const double amp_r = std::hypot(r.psi_right, r.dpsi_right / k);
    r.wronskian =
        (r.psi_left * r.dpsi_right - r.dpsi_left * r.psi_right) / (k * amp_l * amp_r);
    return r;
}

ShotResult shoot_mismatch(const PotentialParams& p, double energy, const OracleGrid& g) {
    return Shooter(p, g).shoot(energy);
}

namespace {

EnergyLevel classify(const Shooter& shooter, double energy) {
    const ShotResult r = shooter.shoot(energy);
    const PotentialParams& p = shooter.params();
    const double k =
        std::sqrt(-(energy - p.eps_plus + p.m0c2) * (energy + p.eps_plus - p.m0c2)) / p.hbar_c;

    // psi(0) ~ 0 marks an odd state, psi'(0) ~ 0 an even one.
    const Parity parity =
        std::abs(r.psi_left) < std::abs(r.dpsi_left / k) ? Parity::odd : Parity::even;

    // Least-squares factor taking the right solution onto the left one.
    const double kk = k * k;
    const double c = (r.psi_left * r.psi_right + r.dpsi_left * r.dpsi_right / kk) /
                     (r.psi_right * r.psi_right + r.dpsi_right * r.dpsi_right / kk);
    const bool crossing = (r.psi_left_inner > 0.0) != (c * r.psi_right_inner > 0.0);
    const int n = r.left_nodes + r.right_nodes + (crossing ? 1 : 0);
    return {n, energy, parity, std::abs(r.wronskian), parity_of(n) == parity};
}

}  // namespace

Spectrum oracle_spectrum(const PotentialParams& p, const OracleGrid& g, const OracleOptions& opts) {
    if (!(opts.step > 0.0) || !(opts.tol > 0.0)) {
        throw DomainError("oracle_spectrum: step and tol must be positive");
    }
    const Shooter shooter(p, g);
    const EnergyInterval iv = allowed_interval(p);
    const std::vector<double> grid = energy_grid(iv, opts.step);

    Spectrum s;
    s.params = p;
    if (grid.size() < 2) return s;
    const std::vector<double> w = kernels::wronskians(shooter, grid, opts.exec);

    struct Bracket {
        double lo, hi, f_lo;
    };
    std::vector<Bracket> brackets;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (w[i] == 0.0 || (w[i] < 0.0) != (w[i + 1] < 0.0)) {
            if (w[i + 1] == 0.0 && i + 2 < grid.size()) continue;
            brackets.push_back({grid[i], grid[i + 1], w[i]});
        }
    }

    std::vector<EnergyLevel> levels(brackets.size());
    std::vector<std::exception_ptr> errors(brackets.size());
    const auto count = static_cast<std::ptrdiff_t>(brackets.size());
#pragma omp parallel for schedule(dynamic) if (opts.exec == Exec::parallel)
    for (std::ptrdiff_t b = 0; b < count; ++b) {
        try {
            Bracket br = brackets[b];
            int iter = 0;
            while (br.f_lo != 0.0 && br.hi - br.lo > opts.tol) {
                if (++iter > opts.max_iterations) {
                    std::ostringstream os;
                    os.precision(10);
                    os << "oracle bisection did not converge in bracket [" << brackets[b].lo
                       << ", " << brackets[b].hi << "] MeV";
                    throw ConvergenceError(os.str());
                }
                const double mid = 0.5 * (br.lo + br.hi);
                const double fm = shooter.shoot(mid).wronskian;
                if (fm == 0.0) {
                    br.lo = br.hi = mid;
                } else if ((fm < 0.0) == (br.f_lo < 0.0)) {
                    br.lo = mid;
                    br.f_lo = fm;
                } else {
                    br.hi = mid;
                }
            }
            const double root = br.f_lo == 0.0 ? br.lo : 0.5 * (br.lo + br.hi);
            levels[b] = classify(shooter, root);
        } catch (...) {
            errors[b] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    for (const EnergyLevel& l : levels) {
        if (!s.levels.empty() && l.energy - s.levels.back().energy < 1e-6) continue;
        s.levels.push_back(l);
    }
    return s;
}

}  // namespace gswsp
