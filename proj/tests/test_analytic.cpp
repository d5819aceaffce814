#include <doctest.h>

#include <array>
#include <cmath>

#include "gswsp/analytic.hpp"
#include "gswsp/errors.hpp"
#include "gswsp/oracle.hpp"
#include "test_helpers.hpp"

using namespace gswsp;

namespace {

double g_at(const PotentialParams& p, Parity branch, double e) {
    return residual_at(p, branch, e).g;
}

std::vector<double> energies(const std::vector<Root>& roots) {
    std::vector<double> out;
    for (const auto& r : roots) out.push_back(r.energy);
    return out;
}

}  // namespace

TEST_CASE("match_terms: nu -> -nu swaps the two continuation terms") {
    const auto p = PotentialParams::repulsive();
    for (double e : {33.962, 250.0, 480.0}) {
        const auto dq = derived_quantities(p, e);
        auto flipped = dq;
        flipped.nu = -dq.nu;
        const auto mt = match_terms(dq);
        const auto mf = match_terms(flipped);
        CHECK(mf.s1 == mt.s2);
        CHECK(mf.s2 == mt.s1);
        CHECK(mf.n1 == mt.n2);
        CHECK(mf.n2 == mt.n1);
    }
}

TEST_CASE("match_terms reproduce the directly summed 2F1 at t0") {
    // mpmath values of 2F1(a, b; 1 + 2 mu; t0) and 2F1(a + 1, b + 1; 2 + 2 mu; t0)
    // at E = 33.962 MeV, repulsive, eps+ = 0.
    const auto dq = derived_quantities(PotentialParams::repulsive(), 33.962);
    const auto mt = match_terms(dq);
    CHECK(test::rel_err(mt.s1, {-6892.5642536530739, -11498.296879507411}) < 1e-11);
    CHECK(test::rel_err(mt.n1, {1.0359613017318223, -0.039509138376717291}) < 1e-12);
    CHECK(test::rel_err(mt.m1, {-16247.420522645883, -22515.489056206525}) < 1e-10);
    CHECK(test::rel_err(mt.m3, {959412.94597525222, -860179.14135171793}) < 1e-10);
}

TEST_CASE("conjugate structure |S1 N1| = |S2 N2|") {
    const auto p = PotentialParams::repulsive();
    const auto mt = match_terms(derived_quantities(p, 250.0));
    CHECK(std::abs(mt.s1 * mt.n1) / std::abs(mt.s2 * mt.n2) == doctest::Approx(1.0).epsilon(1e-8));

    for (const auto& base : {PotentialParams::repulsive(), PotentialParams::attractive()}) {
        const auto iv = allowed_interval(base);
        for (int s = 0; s < 100; ++s) {
            const double e = test::uniform(iv.lower + 1e-3, iv.upper - 1e-3);
            const auto m = match_terms(derived_quantities(base, e));
            CHECK(std::abs(std::abs(m.s1 * m.n1) / std::abs(m.s2 * m.n2) - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("imaginary leak of both projections stays below 1e-8") {
    for (const auto& base : {PotentialParams::repulsive(), PotentialParams::attractive()}) {
        const auto iv = allowed_interval(base);
        for (int s = 0; s < 100; ++s) {
            const double e = test::uniform(iv.lower + 1e-3, iv.upper - 1e-3);
            const auto dq = derived_quantities(base, e);
            const auto mt = match_terms(dq);
            CAPTURE(e);
            CHECK(odd_residual(dq, mt).im_leak < 1e-8);
            CHECK(even_residual(dq, mt).im_leak < 1e-8);
        }
    }
}

TEST_CASE("residual sign changes bracket tabulated levels") {
    const auto p = PotentialParams::repulsive();
    CHECK((g_at(p, Parity::odd, 86.193 - 2.0) < 0.0) != (g_at(p, Parity::odd, 86.193 + 2.0) < 0.0));
    CHECK((g_at(p, Parity::even, 139.0) < 0.0) != (g_at(p, Parity::even, 141.0) < 0.0));
    CHECK((g_at(p, Parity::even, 33.962 - 0.25) < 0.0) !=
          (g_at(p, Parity::even, 33.962 + 0.25) < 0.0));
}

TEST_CASE("at the ground state only the even projection vanishes") {
    const auto p = PotentialParams::repulsive();
    const auto roots = scan_roots(p, Parity::even);
    REQUIRE(!roots.empty());
    const double e0 = roots.front().energy;
    CHECK(e0 == doctest::Approx(33.962).epsilon(0.5 / 33.962));
    const double scale_even = std::max(std::abs(g_at(p, Parity::even, e0 - 1.0)),
                                       std::abs(g_at(p, Parity::even, e0 + 1.0)));
    const double scale_odd = std::max(std::abs(g_at(p, Parity::odd, e0 - 1.0)),
                                      std::abs(g_at(p, Parity::odd, e0 + 1.0)));
    CHECK(std::abs(g_at(p, Parity::even, e0)) < 1e-9 * scale_even);
    CHECK(std::abs(g_at(p, Parity::odd, e0)) > 1e-2 * scale_odd);
}

TEST_CASE("scan_roots reproduces the tabulated eps+ = 0 branches") {
    const auto p = PotentialParams::repulsive();
    const std::array even{33.962, 139.950, 249.319, 355.809, 457.746};
    const std::array odd{86.193, 194.935, 303.138, 407.437};
    const auto re = energies(scan_roots(p, Parity::even));
    const auto ro = energies(scan_roots(p, Parity::odd));
    REQUIRE(re.size() == even.size());
    REQUIRE(ro.size() == odd.size());
    for (std::size_t i = 0; i < even.size(); ++i) CHECK(std::abs(re[i] - even[i]) < 0.5);
    for (std::size_t i = 0; i < odd.size(); ++i) CHECK(std::abs(ro[i] - odd[i]) < 0.5);

    for (const auto& r : scan_roots(p, Parity::even)) CHECK(r.rel_residual < 1e-9);
}

TEST_CASE("halving the scan step leaves the roots unchanged") {
    for (const auto& p : {PotentialParams::repulsive(), PotentialParams::attractive(50.0)}) {
        for (Parity branch : {Parity::even, Parity::odd}) {
            ScanOptions coarse, fine;
            fine.step = coarse.step / 2.0;
            const auto a = scan_roots(p, branch, coarse);
            const auto b = scan_roots(p, branch, fine);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(std::abs(a[i].energy - b[i].energy) < 1e-6);
            }
        }
    }
}

TEST_CASE("scan_roots argument checks") {
    ScanOptions bad;
    bad.step = 0.0;
    CHECK_THROWS_AS(scan_roots(PotentialParams::repulsive(), Parity::even, bad), DomainError);
}

TEST_CASE("build_spectrum: repulsive configurations") {
    const auto s0 = build_spectrum(PotentialParams::repulsive());
    REQUIRE(s0.levels.size() == 9);
    for (int n = 0; n < 9; ++n) {
        const auto& l = s0.levels[static_cast<std::size_t>(n)];
        CHECK(l.n == n);
        CHECK(l.branch == parity_of(n));
        CHECK(l.nodes_verified);
        CHECK(l.residual_abs < 1e-9);
    }
    CHECK(s0.levels[0].energy == doctest::Approx(33.962).epsilon(0.5 / 33.962));

    const auto half = build_spectrum(PotentialParams::repulsive(248.824));
    REQUIRE(half.levels.size() == 7);
    CHECK(half.levels.front().n == 0);
    CHECK(half.levels.back().n == 6);
    CHECK(std::abs(half.levels.front().energy + 166.575) < 0.5);
}

TEST_CASE("build_spectrum: attractive configuration starts above n = 0") {
    // Node labels come from counting, so the lowest level need not be n = 0.
    const auto s = build_spectrum(PotentialParams::attractive(50.0));
    REQUIRE(!s.levels.empty());
    CHECK(s.levels.front().n == 4);
    CHECK(std::abs(s.levels.front().energy + 40.169) < 0.5);
    for (std::size_t i = 1; i < s.levels.size(); ++i) {
        CHECK(s.levels[i].n == s.levels[i - 1].n + 1);
        CHECK(s.levels[i].energy > s.levels[i - 1].energy);
    }
}

TEST_CASE("spectrum invariants hold for random valid configurations") {
    for (int s = 0; s < 5; ++s) {
        PotentialParams p;
        p.m0c2 = test::uniform(300.0, 800.0);
        p.v0 = test::uniform(0.3, 0.6) * p.m0c2;
        p.w = test::uniform(-2.0, 2.0) * p.m0c2;
        p.alpha = test::uniform(0.8, 1.5);
        p.l = test::uniform(3.0, 7.0);
        p.eps_plus = test::uniform(0.0, 0.3) * p.m0c2;
        CAPTURE(p.m0c2);
        CAPTURE(p.w);
        const auto spec = build_spectrum(p);
        const auto iv = allowed_interval(p);
        for (std::size_t i = 0; i < spec.levels.size(); ++i) {
            const auto& l = spec.levels[i];
            CHECK(iv.contains(l.energy));
            CHECK(parity_of(l.n) == l.branch);
            if (i > 0) CHECK(l.n == spec.levels[i - 1].n + 1);
        }
        const auto oracle = oracle_spectrum(p, OracleGrid::for_params(p));
        REQUIRE(oracle.levels.size() == spec.levels.size());
        for (std::size_t i = 0; i < spec.levels.size(); ++i) {
            CHECK(oracle.levels[i].n == spec.levels[i].n);
            CHECK(std::abs(oracle.levels[i].energy - spec.levels[i].energy) < 0.05);
        }
    }
}

TEST_CASE("plain Woods-Saxon limit W = 0") {
    PotentialParams p;
    p.w = 0.0;
    const auto dq = derived_quantities(p, 100.0);
    CHECK(std::abs(dq.theta) == 0.0);
    const auto s = build_spectrum(p);
    REQUIRE(s.levels.size() >= 2);
    CHECK(s.levels.front().n == 0);
    const auto o = oracle_spectrum(p, OracleGrid::for_params(p));
    REQUIRE(o.levels.size() == s.levels.size());
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
        CHECK(s.levels[i].n == static_cast<int>(i));
        CHECK(std::abs(o.levels[i].energy - s.levels[i].energy) < 0.05);
    }
}

TEST_CASE("step_sizes") {
    const auto s = build_spectrum(PotentialParams::repulsive());
    const auto steps = step_sizes(s);
    REQUIRE(steps.size() == 8);
    const std::array want{52.231, 53.757, 54.985, 54.384};
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(steps[i].n == static_cast<int>(i));
        CHECK(std::abs(steps[i].delta - want[i]) < 0.5);
    }
    CHECK(steps[1].delta > steps[0].delta);
    CHECK(steps[2].delta > steps[1].delta);
    CHECK(steps[3].delta < steps[2].delta);

    const auto s50 = build_spectrum(PotentialParams::repulsive(50.0));
    CHECK(step_sizes(s50)[0].delta > steps[0].delta);
    CHECK(std::abs(step_sizes(s50)[0].delta - 57.146) < 0.5);

    Spectrum single;
    single.levels.push_back({0, 1.0, Parity::even, 0.0, true});
    CHECK_THROWS_AS(step_sizes(single), DomainError);
}
