#include "gswsp/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "gswsp/errors.hpp"
#include "gswsp/kernels.hpp"
#include "gswsp/wavefunction.hpp"

namespace gswsp {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();
constexpr double kDuplicateTol = 1e-6;  // MeV

Complex ratio(std::initializer_list<Complex> num, std::initializer_list<Complex> den) {
    return gamma_ratio_product(std::span(num.begin(), num.size()),
                               std::span(den.begin(), den.size()));
}

}  // namespace

MatchTerms match_terms(const DimensionlessSet& dq, const SeriesControl& ctrl) {
    const double mu = dq.mu;
    const Complex nu = dq.nu;
    const Complex th = dq.theta;
    const double x = 1.0 - dq.t0;

    MatchTerms mt;
    mt.s1 = ratio({1.0 + 2.0 * mu, -2.0 * nu}, {1.0 + mu - th - nu, mu + th - nu});
    mt.s2 = ratio({1.0 + 2.0 * mu, 2.0 * nu}, {1.0 + mu - th + nu, mu + th + nu});
    mt.s3 = ratio({2.0 + 2.0 * mu, -1.0 - 2.0 * nu}, {1.0 + mu - th - nu, mu + th - nu});
    mt.s4 = ratio({2.0 + 2.0 * mu, 1.0 + 2.0 * nu}, {2.0 + mu - th + nu, 1.0 + mu + th + nu});

    mt.n1 = hyp2f1(mu + th + nu, 1.0 + mu - th + nu, 1.0 + 2.0 * nu, x, ctrl);
    mt.n2 = hyp2f1(1.0 + mu - th - nu, mu + th - nu, 1.0 - 2.0 * nu, x, ctrl);
    mt.n3 = hyp2f1(1.0 + mu + th + nu, 2.0 + mu - th + nu, 2.0 + 2.0 * nu, x, ctrl);
    mt.n4 = hyp2f1(1.0 + mu - th - nu, mu + th - nu, -2.0 * nu, x, ctrl);

    mt.m1 = mt.s1 * mt.n1 + unit_power(x, -2.0 * nu) * mt.s2 * mt.n2;
    mt.m3 = mt.s3 * mt.n3 + unit_power(x, -1.0 - 2.0 * nu) * mt.s4 * mt.n4;
    return mt;
}

Residual odd_residual(const DimensionlessSet& dq, const MatchTerms& mt) {
    const double x = 1.0 - dq.t0;
    const Complex phase = unit_power(x, dq.nu);
    const Complex half = phase * mt.s1 * mt.n1;
    // phase * m1 is the sum of half and its complex conjugate.
    const Complex full = phase * mt.m1;
    const double mag = std::abs(mt.s1 * mt.n1) + std::abs(mt.s2 * mt.n2);
    return {half.real(), std::abs(full.imag()) / (mag + kTiny)};
}

Residual even_residual(const DimensionlessSet& dq, const MatchTerms& mt) {
    const double x = 1.0 - dq.t0;
    const double t0 = dq.t0;
    const double mu = dq.mu;
    const Complex nu = dq.nu;
    const Complex th = dq.theta;

    const Complex c1 = mu / t0 + nu / (t0 - 1.0);
    const Complex c3 = (mu + th + nu) * (1.0 + mu - th + nu) / (1.0 + 2.0 * mu);
    const Complex bracket = c1 * mt.m1 + c3 * mt.m3;
    const Complex phased = unit_power(x, dq.nu) * bracket;

    const double mag =
        std::abs(c1) * (std::abs(mt.s1 * mt.n1) + std::abs(mt.s2 * mt.n2)) +
        std::abs(c3) * (std::abs(mt.s3 * mt.n3) + std::abs(mt.s4 * mt.n4) / x);
    return {phased.real(), std::abs(phased.imag()) / (mag + kTiny)};
}

Residual residual_at(const PotentialParams& p, Parity branch, double energy) {
    const DimensionlessSet dq = derived_quantities(p, energy);
    const MatchTerms mt = match_terms(dq);
    return branch == Parity::even ? even_residual(dq, mt) : odd_residual(dq, mt);
}

namespace {

struct Bracket {
    double lo, hi, f_lo, f_hi;
};

Root refine_root(const PotentialParams& p, Parity branch, const EnergyInterval& domain,
                 Bracket br, const ScanOptions& opts) {
    auto g = [&](double e) { return residual_at(p, branch, e).g; };

    const double scale = std::max(std::abs(br.f_lo), std::abs(br.f_hi));
    if (br.f_lo == 0.0) return {br.lo, 0.0};
    if (br.f_hi == 0.0) return {br.hi, 0.0};

    double a = br.lo, fa = br.f_lo, b = br.hi;
    double x = a - fa * (b - a) / (br.f_hi - fa);
    double last_step = std::numeric_limits<double>::infinity();

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        const double fx = g(x);
        const double rel = std::abs(fx) / scale;
        if (fx == 0.0 || (rel < opts.accept_tol && last_step < opts.tol)) {
            return {x, rel};
        }
        if ((fx < 0.0) == (fa < 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }

        const double h = std::min({opts.derivative_h, 0.5 * (x - domain.lower),
                                   0.5 * (domain.upper - x)});
        const double slope = (g(x + h) - g(x - h)) / (2.0 * h);
        double next = slope != 0.0 ? x - fx / slope : std::numeric_limits<double>::quiet_NaN();
        const double lo = std::min(a, b), hi = std::max(a, b);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (a + b);
        }
        last_step = std::abs(next - x);
        x = next;
    }
    std::ostringstream os;
    os.precision(10);
    os << "root refinement did not converge in " << opts.max_iterations
       << " iterations for " << to_string(branch) << " bracket [" << br.lo << ", " << br.hi
       << "] MeV";
    throw ConvergenceError(os.str());
}

}  // namespace

std::vector<Root> scan_roots(const PotentialParams& p, Parity branch, const ScanOptions& opts) {
    if (!(opts.step > 0.0) || !(opts.tol > 0.0)) {
        throw DomainError("scan_roots: step and tol must be positive");
    }
    require_valid(p);
    const EnergyInterval iv = allowed_interval(p);
    const std::vector<double> grid = energy_grid(iv, opts.step);
    if (grid.size() < 2) return {};
    const std::vector<double> values = kernels::residuals(p, branch, grid, opts.exec);

    std::vector<Bracket> brackets;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double f0 = values[i], f1 = values[i + 1];
        if (f0 == 0.0 || (f0 < 0.0) != (f1 < 0.0)) {
            if (f1 == 0.0 && i + 2 < grid.size()) continue;  // picked up by the next bracket
            brackets.push_back({grid[i], grid[i + 1], f0, f1});
        }
    }

    std::vector<Root> roots(brackets.size());
    std::vector<std::exception_ptr> errors(brackets.size());
    const auto n = static_cast<std::ptrdiff_t>(brackets.size());
#pragma omp parallel for schedule(dynamic) if (opts.exec == Exec::parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            roots[i] = refine_root(p, branch, iv, brackets[i], opts);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::vector<Root> out;
    for (const Root& r : roots) {
        if (!out.empty() && r.energy - out.back().energy < kDuplicateTol) continue;
        out.push_back(r);
    }
    return out;
}

Spectrum build_spectrum(const PotentialParams& p, const SpectrumOptions& opts) {
    require_valid(p);
    struct Candidate {
        Root root;
        Parity branch;
    };
    std::vector<Candidate> all;
    for (Parity branch : {Parity::even, Parity::odd}) {
        for (const Root& r : scan_roots(p, branch, opts.scan)) all.push_back({r, branch});
    }
    std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
        return a.root.energy < b.root.energy;
    });

    Spectrum s;
    s.params = p;
    for (const Candidate& c : all) {
        if (!s.levels.empty() && c.root.energy - s.levels.back().energy < kDuplicateTol) {
            continue;
        }
        const int n = node_count(p, {c.root.energy, 1.0, c.branch}, opts.node_grid);
        EnergyLevel level{n, c.root.energy, c.branch, c.root.rel_residual,
                          parity_of(n) == c.branch};
        if (!level.nodes_verified) {
            std::ostringstream os;
            os.precision(10);
            os << "level at " << c.root.energy << " MeV on the " << to_string(c.branch)
               << " branch has " << n << " nodes";
            throw ParityError(os.str());
        }
        if (!s.levels.empty() && n <= s.levels.back().n) {
            std::ostringstream os;
            os.precision(10);
            os << "node count " << n << " at " << c.root.energy
               << " MeV does not exceed the previous level's " << s.levels.back().n;
            throw ParityError(os.str());
        }
        s.levels.push_back(level);
    }
    return s;
}

std::vector<StepSize> step_sizes(const Spectrum& s) {
    if (s.levels.size() < 2) {
        throw DomainError("step_sizes: spectrum needs at least two levels");
    }
    std::vector<StepSize> out;
    for (std::size_t i = 0; i + 1 < s.levels.size(); ++i) {
        out.push_back({s.levels[i].n, s.levels[i + 1].energy - s.levels[i].energy});
    }
    return out;
}

std::vector<double> energy_grid(const EnergyInterval& iv, double step) {
    const double first = iv.lower + kEndpointMargin;
    const double last = iv.upper - kEndpointMargin;
    std::vector<double> grid;
    if (!(last > first)) return grid;
    const auto count = static_cast<std::size_t>(std::floor((last - first) / step));
    grid.reserve(count + 2);
    for (std::size_t i = 0; i <= count; ++i) {
        grid.push_back(first + static_cast<double>(i) * step);
    }
    if (last - grid.back() > 1e-9) grid.push_back(last);
    return grid;
}

}  // namespace gswsp
