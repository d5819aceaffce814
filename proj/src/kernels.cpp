#include "gswsp/kernels.hpp"

#include <exception>

#include "gswsp/analytic.hpp"

namespace gswsp::kernels {

namespace {

// Runs body(i) for every index, keeping the first exception by index so the
// reported failure does not depend on thread scheduling.
template <class Body>
void parallel_indexed(std::size_t n, Body body) {
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

std::vector<double> residuals_serial(const PotentialParams& p, Parity branch,
                                     std::span<const double> energies) {
    std::vector<double> out(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i) {
        out[i] = residual_at(p, branch, energies[i]).g;
    }
    return out;
}

std::vector<double> residuals_omp(const PotentialParams& p, Parity branch,
                                  std::span<const double> energies) {
    std::vector<double> out(energies.size());
    parallel_indexed(energies.size(),
                     [&](std::size_t i) { out[i] = residual_at(p, branch, energies[i]).g; });
    return out;
}

std::vector<double> residuals(const PotentialParams& p, Parity branch,
                              std::span<const double> energies, Exec exec) {
    return exec == Exec::parallel ? residuals_omp(p, branch, energies)
                                  : residuals_serial(p, branch, energies);
}

std::vector<double> wronskians_serial(const Shooter& shooter, std::span<const double> energies) {
    std::vector<double> out(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i) {
        out[i] = shooter.shoot(energies[i]).wronskian;
    }
    return out;
}

std::vector<double> wronskians_omp(const Shooter& shooter, std::span<const double> energies) {
    std::vector<double> out(energies.size());
    parallel_indexed(energies.size(),
                     [&](std::size_t i) { out[i] = shooter.shoot(energies[i]).wronskian; });
    return out;
}

std::vector<double> wronskians(const Shooter& shooter, std::span<const double> energies,
                               Exec exec) {
    return exec == Exec::parallel ? wronskians_omp(shooter, energies)
                                  : wronskians_serial(shooter, energies);
}

}  // namespace gswsp::kernels
