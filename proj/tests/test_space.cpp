// test_space.cpp - Luxemburg and associate norms, exponent diagnostics
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "hardysn/space.hpp"
#include "test_util.hpp"

using namespace hardysn;

TEST_SUITE_BEGIN("space");

TEST_CASE("space spec validation") {
    CHECK_THROWS_AS(SpaceSpec::constant(1.0), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::constant(0.5), std::invalid_argument);
    SpaceSpec sp = SpaceSpec::constant(3.0);
    CHECK(sp.is_constant());
    CHECK(sp.exponent() == doctest::Approx(3.0));
    CHECK_THROWS_AS(sp.exponents(), std::logic_error);
    CHECK(sp.conjugate().exponent() == doctest::Approx(1.5));
    CHECK(!sp.associate_caveat());

    Interval iv(0.0, 1.0);
    GridFunction bad =
        GridFunction::from_callable(iv, 16, [](double x) { return 0.9 + x; });
    CHECK_THROWS_AS(SpaceSpec::variable(bad), std::invalid_argument);
    GridFunction good =
        GridFunction::from_callable(iv, 16, [](double x) { return 2.0 + x; });
    SpaceSpec vsp = SpaceSpec::variable(good);
    CHECK(!vsp.is_constant());
    CHECK(vsp.associate_caveat());
    CHECK_THROWS_AS(vsp.exponent(), std::logic_error);
    CHECK(vsp.p_min() > 2.0);
    CHECK(vsp.p_max() < 3.0);
}

TEST_CASE("constant-exponent norm against the closed form") {
    Interval iv(0.0, 1.0);
    const int m = 512;
    GridFunction f = GridFunction::from_callable(iv, m, [](double x) { return x; });
    for (double p : {1.5, 2.0, 3.0, 4.5}) {
        SpaceSpec sp = SpaceSpec::constant(p);
        // ||x||_p on (0,1) = (1/(p+1))^{1/p}; midpoint quadrature is
        // second-order accurate
        const double exact = std::pow(1.0 / (p + 1.0), 1.0 / p);
        CHECK(luxemburg_norm(f, sp, iv) == doctest::Approx(exact).epsilon(5e-6));
    }
}

TEST_CASE("norm positive homogeneity") {
    Interval iv(0.0, 1.0);
    std::mt19937 rng(7);
    GridFunction f = test::random_function(rng, iv, 64);
    for (double p : {1.5, 2.0, 3.7}) {
        SpaceSpec sp = SpaceSpec::constant(p);
        const double n1 = luxemburg_norm(f, sp, iv);
        const double n2 = luxemburg_norm(
            combine(f, f, 2.5, 0.0), sp, iv);
        CHECK(n2 == doctest::Approx(2.5 * n1).epsilon(1e-10));
    }
    // variable exponent path
    GridFunction pe =
        GridFunction::from_callable(iv, 64, [](double x) { return 2.0 + x; });
    SpaceSpec vsp = SpaceSpec::variable(pe);
    const double n1 = luxemburg_norm(f, vsp, iv);
    const double n2 = luxemburg_norm(combine(f, f, 2.5, 0.0), vsp, iv);
    CHECK(n2 == doctest::Approx(2.5 * n1).epsilon(1e-8));
}

TEST_CASE("variable path agrees with the constant closed form") {
    Interval iv(0.0, 1.0);
    const int m = 256;
    GridFunction f =
        GridFunction::from_callable(iv, m, [](double x) { return 1.0 + x * x; });
    for (double p : {1.5, 2.0, 3.0}) {
        SpaceSpec cs = SpaceSpec::constant(p);
        SpaceSpec vs = SpaceSpec::variable(GridFunction::constant(iv, m, p));
        const double a = luxemburg_norm(f, cs, iv);
        const double b = luxemburg_norm(f, vs, iv);
        CHECK(b == doctest::Approx(a).epsilon(1e-8));
    }
}

TEST_CASE("variable-exponent unit ball normalization") {
    Interval iv(0.0, 1.0);
    const int m = 128;
    GridFunction pe = GridFunction::from_callable(
        iv, m, [](double x) { return 2.0 + std::sin(3.0 * x); });
    SpaceSpec sp = SpaceSpec::variable(pe);
    std::mt19937 rng(11);
    for (int t = 0; t < 5; ++t) {
        GridFunction f = test::random_function(rng, iv, m);
        const double n = luxemburg_norm(f, sp, iv);
        REQUIRE(n > 0.0);
        // the modular of f / ||f|| must sit at 1
        GridFunction g = combine(f, f, 1.0 / n, 0.0);
        double modular = 0.0;
        for (int i = 0; i < m; ++i)
            modular += std::pow(std::abs(g[i]), pe[i]) * g.h();
        CHECK(modular == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("restriction to a subinterval never increases the norm") {
    Interval iv(0.0, 1.0);
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        GridFunction f = test::random_function(rng, iv, 128);
        SpaceSpec sp = test::random_constant_space(rng);
        Interval j = test::random_subinterval(rng, iv);
        CHECK(luxemburg_norm(f, sp, j) <=
              luxemburg_norm(f, sp, iv) * (1.0 + 1e-12));
    }
}

TEST_CASE("holder inequality via the associate norm") {
    Interval iv(0.0, 1.0);
    std::mt19937 rng(23);
    const int m = 128;
    for (int t = 0; t < 40; ++t) {
        GridFunction f = test::random_function(rng, iv, m);
        GridFunction g = test::random_function(rng, iv, m);
        SpaceSpec sp = test::random_constant_space(rng);
        Interval j = test::random_subinterval(rng, iv);
        const double d = holder_defect(f, g, sp, j);
        CHECK(d <= 1.0 + 1e-8);
    }
    // equality needs |f|^p proportional to |g|^q: take f = x, g = x^{p-1}
    SpaceSpec sp = SpaceSpec::constant(3.0);
    GridFunction f =
        GridFunction::from_callable(iv, 512, [](double x) { return x; });
    GridFunction g =
        GridFunction::from_callable(iv, 512, [](double x) { return x * x; });
    CHECK(holder_defect(f, g, sp, iv) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("associate norm of an indicator against the conjugate measure") {
    Interval iv(0.0, 1.0);
    const int m = 256;
    GridFunction one = GridFunction::constant(iv, m, 1.0);
    SpaceSpec sp = SpaceSpec::constant(3.0);
    // ||chi_J||_{E'} = |J|^{1/q}
    Interval j(0.2, 0.7);
    CHECK(associate_norm(one, sp, j) ==
          doctest::Approx(std::pow(0.5, 1.0 / 1.5)).epsilon(1e-9));
}

TEST_CASE("muckenhoupt constant is unity for constant exponents") {
    Interval iv(0.0, 1.0);
    SpaceSpec sp = SpaceSpec::constant(2.0);
    const double mu = muckenhoupt_constant(sp, iv, 6);
    CHECK(mu == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("muckenhoupt constant stays finite for smooth variable exponents") {
    Interval iv(0.0, 1.0);
    GridFunction pe =
        GridFunction::from_callable(iv, 256, [](double x) { return 2.0 + x; });
    SpaceSpec sp = SpaceSpec::variable(pe);
    const double mu = muckenhoupt_constant(sp, iv, 6);
    CHECK(std::isfinite(mu));
    CHECK(mu >= 1.0 - 1e-9);
    CHECK(mu < 10.0);
}

TEST_CASE("log-holder check accepts smooth profiles") {
    Interval iv(0.0, 1.0);
    GridFunction pe =
        GridFunction::from_callable(iv, 256, [](double x) { return 2.0 + x; });
    LogHolderReport rep = log_holder_check(pe);
    CHECK(rep.pass);
    CHECK(std::isfinite(rep.constant));
}

TEST_CASE("log-holder constant grows under refinement for a jump") {
    Interval iv(0.0, 1.0);
    auto jump = [](double x) { return x < 0.5 ? 1.6 : 2.8; };
    const double c1 =
        log_holder_check(GridFunction::from_callable(iv, 64, jump)).constant;
    const double c2 =
        log_holder_check(GridFunction::from_callable(iv, 256, jump)).constant;
    CHECK(c2 > c1 * 1.2);  // discontinuity shows up as growth with resolution
}

TEST_SUITE_END();
