// test_partition.cpp - epsilon partitions, the scale solver, asymptotics
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hardysn/partition.hpp"

using namespace hardysn;

namespace {
constexpr double kPi = 3.141592653589793;

// Mean-square reference values for the unit operator on (0, 1):
// sigma_n = 2 / ((2n - 1) pi).
double unit_sigma(int n) { return 2.0 / ((2 * n - 1) * kPi); }

struct UnitSetup {
    Interval iv{0.0, 1.0};
    GridFunction one;
    WeightPair w;
    SpaceSpec sp;
    explicit UnitSetup(int m)
        : one(GridFunction::constant(iv, m, 1.0)),
          w(one, one),
          sp(SpaceSpec::constant(2.0)) {}
};
}  // namespace

TEST_SUITE_BEGIN("partition");

TEST_CASE("piece counts follow the mean-square scale") {
    UnitSetup s(512);
    // count(eps) = n exactly for eps in [sigma_n, sigma_{n-1})
    CHECK(build_partition(0.70, s.iv, s.w, s.sp).count() == 1);
    CHECK(build_partition(0.50, s.iv, s.w, s.sp).count() == 2);
    CHECK(build_partition(0.30, s.iv, s.w, s.sp).count() == 2);
    CHECK(build_partition(0.20, s.iv, s.w, s.sp).count() == 3);
    CHECK(build_partition(0.13, s.iv, s.w, s.sp).count() == 3);
    CHECK(build_partition(0.10, s.iv, s.w, s.sp).count() == 4);
}

TEST_CASE("partition pieces carry the construction invariants") {
    UnitSetup s(512);
    const double eps = 0.17;
    Partition part = build_partition(eps, s.iv, s.w, s.sp);
    REQUIRE(part.count() >= 2);
    CHECK(part.points.front() == doctest::Approx(0.0));
    CHECK(part.points.back() == doctest::Approx(1.0));
    for (std::size_t i = 1; i < part.points.size(); ++i)
        CHECK(part.points[i] > part.points[i - 1]);
    CHECK(part.pieces.front().kind == PieceKind::FirstNorm);
    for (std::size_t i = 1; i < part.pieces.size(); ++i)
        CHECK(part.pieces[i].kind == PieceKind::Balanced);
    // every piece value stays within a march tolerance of the target,
    // and the closing piece sits at or below it
    for (const PieceInfo& pc : part.pieces)
        CHECK(pc.value <= eps * (1.0 + 5e-3));
    CHECK(part.pieces.back().value <= eps);
    // the first cut of the unit operator solves 2 x / pi = eps
    CHECK(part.points[1] == doctest::Approx(eps * kPi / 2.0).epsilon(5e-3));
}

TEST_CASE("input validation") {
    UnitSetup s(64);
    CHECK_THROWS_AS(build_partition(0.0, s.iv, s.w, s.sp),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_partition(-1.0, s.iv, s.w, s.sp),
                    std::invalid_argument);
    // epsilon below what one grid cell already carries
    CHECK_THROWS_AS(build_partition(1e-6, s.iv, s.w, s.sp),
                    std::runtime_error);
    CHECK_THROWS_AS(solve_epsilon(0, s.iv, s.w, s.sp), std::invalid_argument);
}

TEST_CASE("epsilon solver lands on the mean-square boundary") {
    UnitSetup s(512);
    for (int n : {4, 8}) {
        EpsilonSolve es = solve_epsilon(n, s.iv, s.w, s.sp);
        CHECK(es.partition.count() == n);
        CHECK(es.epsilon == doctest::Approx(unit_sigma(n)).epsilon(0.02));
        CHECK(es.marches >= 2);
    }
    // spot values of the scale
    EpsilonSolve e8 = solve_epsilon(8, s.iv, s.w, s.sp);
    CHECK(8.0 * e8.epsilon >= 0.25);
    CHECK(8.0 * e8.epsilon <= 0.40);
    EpsilonSolve e16 = solve_epsilon(16, s.iv, s.w, s.sp);
    const double ratio = e16.epsilon / e8.epsilon;
    CHECK(ratio >= 0.35);
    CHECK(ratio <= 0.65);
}

TEST_CASE("solver count boundary for n = 1 is the operator norm") {
    UnitSetup s(256);
    EpsilonSolve es = solve_epsilon(1, s.iv, s.w, s.sp);
    CHECK(es.partition.count() == 1);
    CHECK(es.epsilon == doctest::Approx(2.0 / kPi).epsilon(5e-3));
}

TEST_CASE("epsilon scale is jointly homogeneous in the weights") {
    UnitSetup s(256);
    EpsilonSolve base = solve_epsilon(4, s.iv, s.w, s.sp);
    WeightPair scaled(combine(s.one, s.one, 2.0, 0.0),
                      combine(s.one, s.one, 3.0, 0.0));
    EpsilonSolve big = solve_epsilon(4, s.iv, scaled, s.sp);
    CHECK(big.epsilon == doctest::Approx(6.0 * base.epsilon).epsilon(1e-4));
}

TEST_CASE("s-number bracket stays within a factor of five of the truth") {
    UnitSetup s(512);
    for (int n : {2, 4, 8}) {
        SNumberEstimate est = snum_estimate(n, s.iv, s.w, s.sp);
        CHECK(est.lower <= unit_sigma(n) * 5.0);
        CHECK(est.upper >= unit_sigma(n) / 5.0);
        CHECK(est.lower <= est.upper);
        CHECK(!est.notes.empty());
    }
    // custom equivalence constants widen the bracket
    SNumberEstimate est = snum_estimate(4, s.iv, s.w, s.sp, 0.5, 2.0);
    CHECK(est.lower == doctest::Approx(0.5 * est.epsilon));
    CHECK(est.upper == doctest::Approx(2.0 * est.epsilon));
}

TEST_CASE("gamma factor and the constant-exponent reference") {
    CHECK(gamma_factor(2.0) == doctest::Approx(2.0 / kPi).epsilon(1e-12));
    // gamma_p = p^{1/q} q^{1/p} sin(pi/p) / pi at p = 3
    const double g3 = std::pow(3.0, 2.0 / 3.0) * std::pow(1.5, 1.0 / 3.0) *
                      std::sin(kPi / 3.0) / kPi;
    CHECK(gamma_factor(3.0) == doctest::Approx(g3).epsilon(1e-12));
}

TEST_CASE("variable reference reduces to the constant one") {
    Interval iv(0.0, 1.0);
    const int m = 2048;
    SpaceSpec c2 = SpaceSpec::constant(2.0);
    SpaceSpec v2 = SpaceSpec::variable(GridFunction::constant(iv, m, 2.0));
    CHECK(variable_reference(c2, iv) == doctest::Approx(1.0 / kPi).epsilon(1e-12));
    CHECK(variable_reference(v2, iv) == doctest::Approx(1.0 / kPi).epsilon(1e-10));
    // frozen quadrature value for p(x) = 2 + x on (0, 1)
    SpaceSpec vx = SpaceSpec::variable(
        GridFunction::from_callable(iv, m, [](double x) { return 2.0 + x; }));
    CHECK(variable_reference(vx, iv) ==
          doctest::Approx(0.3222261349701437).epsilon(1e-7));
}

TEST_CASE("asymptote rows approach the limiting constant from above") {
    UnitSetup s(512);
    AsymptoteReport rep = asymptote({4, 8, 16}, s.iv, s.w, s.sp);
    CHECK(rep.integral_uv == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.reference == doctest::Approx(1.0 / kPi).epsilon(1e-12));
    CHECK(!rep.reference_only);
    REQUIRE(rep.rows.size() == 3);
    // n eps_n = (1/pi)(1 + 1/(2n-1)) on the mean-square scale
    for (const AsymptoteRow& r : rep.rows) {
        const double expect = 1.0 + 1.0 / (2.0 * r.n - 1.0);
        CHECK(r.ratio == doctest::Approx(expect).epsilon(0.02));
        CHECK(r.n_eps == doctest::Approx(r.ratio / kPi).epsilon(1e-9));
    }
    // the ratio sequence decreases toward 1
    CHECK(rep.rows[0].ratio > rep.rows[1].ratio);
    CHECK(rep.rows[1].ratio > rep.rows[2].ratio);
}

TEST_CASE("asymptote flags the reference outside its validity") {
    Interval iv(0.0, 1.0);
    const int m = 128;
    GridFunction pe =
        GridFunction::from_callable(iv, m, [](double x) { return 2.0 + x; });
    SpaceSpec sp = SpaceSpec::variable(pe);
    GridFunction one = GridFunction::constant(iv, m, 1.0);
    GridFunction two = GridFunction::constant(iv, m, 2.0);
    {
        AsymptoteReport rep = asymptote({1}, iv, WeightPair(one, one), sp);
        CHECK(!rep.reference_only);  // unit weights: the limit applies
        CHECK(rep.reference == doctest::Approx(0.32222613).epsilon(1e-4));
    }
    {
        AsymptoteReport rep = asymptote({1}, iv, WeightPair(two, one), sp);
        CHECK(rep.reference_only);  // quoted outside its validity
    }
}

TEST_SUITE_END();
