#pragma once

#include <cmath>
#include <complex>
#include <random>

namespace test {

inline double rel_err(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want) / std::abs(want);
}

// Fixed-seed generator so every property sample is reproducible.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20181015);
    return gen;
}

inline double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng());
}

}  // namespace test
