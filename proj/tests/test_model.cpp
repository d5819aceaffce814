#include <doctest.h>

#include <cmath>

#include "gswsp/errors.hpp"
#include "gswsp/model.hpp"
#include "test_helpers.hpp"

using namespace gswsp;

TEST_CASE("potential_at") {
    const auto p = PotentialParams::repulsive();
    CHECK(potential_at(p, -p.l) == doctest::Approx(-p.v0 / 2.0 + p.w / 4.0));
    CHECK(potential_at(p, -p.l) == doctest::Approx(124.412));
    CHECK(std::abs(potential_at(p, 30.0)) < 1e-8 * p.v0);
    CHECK(std::abs(potential_at(p, -30.0)) < 1e-8 * p.v0);
    for (double x : {0.5, 3.7, 11.0}) CHECK(potential_at(p, x) == potential_at(p, -x));

    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = -25.0 + 50.0 * i / 9999.0;
        worst = std::max(worst, std::abs(potential_at(p, x) - potential_at(p, -x)));
    }
    CHECK(worst == 0.0);
}

TEST_CASE("allowed_interval") {
    auto iv = allowed_interval(PotentialParams::repulsive(0.0));
    CHECK(iv.lower == 0.0);
    CHECK(iv.upper == 497.648);

    iv = allowed_interval(PotentialParams::repulsive(248.824));
    CHECK(iv.lower == doctest::Approx(-248.824).epsilon(1e-14));
    CHECK(iv.upper == doctest::Approx(248.824).epsilon(1e-14));

    iv = allowed_interval(PotentialParams::repulsive(50.0));
    CHECK(iv.lower == doctest::Approx(-50.0));
    CHECK(iv.upper == doctest::Approx(447.648));

    // V0 = m0c2 / 2: the length stays m0c2 for every eps+ <= m0c2 / 2.
    for (double eps = 0.0; eps <= 248.824; eps += 248.824 / 37.0) {
        CHECK(allowed_interval(PotentialParams::repulsive(eps)).length() ==
              doctest::Approx(497.648).epsilon(1e-12));
    }

    PotentialParams shallow;
    shallow.v0 = 1.0;
    CHECK(allowed_interval(shallow).lower == doctest::Approx(495.648));

    PotentialParams bad;
    bad.eps_plus = bad.m0c2;
    CHECK_THROWS_AS(allowed_interval(bad), IntervalError);
}

TEST_CASE("derived_quantities examples") {
    PotentialParams flat;
    flat.w = 0.0;
    const auto d0 = derived_quantities(flat, 200.0);
    CHECK(d0.gamma2 == 0.0);
    CHECK(std::abs(d0.theta) == 0.0);

    const auto d = derived_quantities(PotentialParams::repulsive(), 33.962);
    CHECK(d.t0 == doctest::Approx(0.99752738).epsilon(1e-8));
    const double k = std::sqrt(497.648 * 497.648 - 33.962 * 33.962) / 197.3269804;
    CHECK(d.k == doctest::Approx(k).epsilon(1e-14));
    CHECK(d.k == doctest::Approx(2.5161).epsilon(1e-4));
    CHECK(d.nu.real() == 0.0);

    CHECK_THROWS_AS(derived_quantities(PotentialParams::repulsive(), 0.0), IntervalError);
    CHECK_THROWS_AS(derived_quantities(PotentialParams::repulsive(), 497.648), IntervalError);
    CHECK_THROWS_AS(derived_quantities(PotentialParams::repulsive(), 600.0), IntervalError);
}

TEST_CASE("derived quantities satisfy the ansatz relations across the interval") {
    for (const auto& base : {PotentialParams::repulsive(), PotentialParams::attractive()}) {
        for (double eps : {0.0, 50.0, 248.824}) {
            PotentialParams p = base;
            p.eps_plus = eps;
            const auto iv = allowed_interval(p);
            for (int s = 0; s < 1000; ++s) {
                const double e = test::uniform(iv.lower + kEndpointMargin, iv.upper - kEndpointMargin);
                const auto d = derived_quantities(p, e);
                CHECK(d.mu > 0.0);
                CHECK(d.kappa > 0.0);
                CHECK(-(e - eps + p.m0c2) * (e + eps - p.m0c2) > 0.0);
                CHECK((e - eps + p.m0c2) * (e + eps - p.m0c2 + 2.0 * p.v0) > 0.0);
                CHECK(d.nu.imag() == doctest::Approx(d.kappa / p.alpha));
                CHECK(std::abs(d.theta * (1.0 - d.theta) - d.gamma2) < 1e-12 * std::max(1.0, std::abs(d.gamma2)));
                CHECK(std::abs(d.mu * d.mu - d.epsilon2) < 1e-12 * std::max(1.0, std::abs(d.epsilon2)));
                const Complex nu2 = d.nu * d.nu;
                const double rhs = d.epsilon2 - d.beta2 - d.gamma2;
                CHECK(std::abs(nu2 - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
                CHECK(d.t0 > 0.5);
                CHECK(d.t0 < 1.0);
            }
        }
    }
}

TEST_CASE("theta branch") {
    const auto rep = derived_quantities(PotentialParams::repulsive(), 100.0);
    CHECK(rep.gamma2 > 0.25);
    CHECK(rep.theta.real() == doctest::Approx(0.5));
    CHECK(rep.theta.imag() < 0.0);

    const auto att = derived_quantities(PotentialParams::attractive(), 100.0);
    CHECK(att.gamma2 < 0.0);
    CHECK(att.theta.imag() == 0.0);
    CHECK(att.theta.real() < 0.0);
}

TEST_CASE("validate_params") {
    CHECK(validate_params(PotentialParams::repulsive()).empty());
    CHECK(validate_params(PotentialParams::attractive()).empty());

    PotentialParams p;
    p.v0 = -5.0;
    auto v = validate_params(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0].bound == "V0 > 0");
    CHECK(v[0].message().find("V0 > 0") != std::string::npos);

    p = PotentialParams{};
    p.eps_plus = p.m0c2;
    v = validate_params(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0].bound == "eps_plus < m0c2");

    p = PotentialParams{};
    p.v_cr_guard = 200.0;
    v = validate_params(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0].bound == "V0 < V_cr");

    p = PotentialParams{};
    p.alpha = 0.0;
    p.l = -1.0;
    p.hbar_c = 0.0;
    CHECK(validate_params(p).size() == 3);
    CHECK_THROWS_AS(require_valid(p), ConfigError);
}
