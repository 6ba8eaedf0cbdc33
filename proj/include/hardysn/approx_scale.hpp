// approx_scale.hpp - local approximation scale of the operator on a subinterval
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include "hardysn/operator.hpp"

namespace hardysn {

/// The central quantity of the partition layer is the deviation scale
///   D(J) = sup_{||f||=1} inf_alpha || T f - alpha v ||_{E(J)},
/// the distance of T's image from the span of v, which is independent of
/// the base point. Its computable stand-ins are the one-sided restricted
/// norms below and their balance point.

enum class Side {
    Left,   // ||T_{x,(J.a, x)}||, base at the right end
    Right,  // ||T_{x,(x, J.b)}||, base at the left end
    Full,   // ||T_{x,J}||, base anywhere inside
};

/// Norm estimate for the operator restricted as Side describes. Built on
/// the certified Rayleigh lower bound, which converges to the norm in
/// practice; degenerate segments give 0.
double restricted_norm(double x, Side side, const Interval& j, const WeightPair& w,
                       const SpaceSpec& sp, const AscentOptions& opts = {14, 1e-11, 2, 0});

struct EqualizeOptions {
    double tol = 1e-4;     // stop when |L-R| <= tol * max(L,R)
    int max_iter = 60;
    double pos_tol = 1e-6; // stop when the bracket is below pos_tol * |J|
    AscentOptions ascent{14, 1e-11, 2, 0};
};

struct BalanceResult {
    double point;
    double left_norm;
    double right_norm;
    double residual;  // |L-R| / max(L,R) at the returned point
    int iterations;
};

/// Balance point e in J where the Left and Right restricted norms agree;
/// they are monotone in x in opposite directions, so bisection applies.
BalanceResult equalize(const Interval& j, const WeightPair& w, const SpaceSpec& sp,
                       const EqualizeOptions& opts = {});

/// The balanced one-sided norm max(L(e), R(e)): the practical surrogate
/// for D(J) that drives the partition construction.
double equalized_norm(const Interval& j, const WeightPair& w, const SpaceSpec& sp,
                      const EqualizeOptions& opts = {});

struct DeviationOptions {
    int budget = 24;       // residual ascent rounds
    unsigned seed = 1;
    int restarts = 5;      // random piecewise-constant trial functions
    AscentOptions ascent{14, 1e-11, 2, 0};
};

/// Direct lower bound for D(J): best over a deterministic trial family
/// (balanced two-bump functions, seeded random restarts, residual ascent
/// iterates), with the inner minimum taken over |alpha| <= 2 ||u||_{E'(J)},
/// a window no optimal alpha for a unit-norm f can leave.
double deviation_lower(const Interval& j, const WeightPair& w, const SpaceSpec& sp,
                       const DeviationOptions& opts = {});

struct DeviationBracket {
    double lower;          // best sup-inf trial value
    double upper;          // scanned minimum of the Full norm map, a valid
                           // upper bound since D(J) <= ||T_{x,J}|| for all x
    double balance_point;
    double alpha_bound;    // 2 ||u||_{E'(J)}
};

/// Two-sided report for D(J); the true value is only pinned up to the
/// equivalence constants of the theory, so both ends are exposed.
DeviationBracket deviation_bracket(const Interval& j, const WeightPair& w,
                                   const SpaceSpec& sp,
                                   const DeviationOptions& opts = {});

struct PerturbationCheck {
    double lhs;           // |D_1(J) - D_2(J)| over the shared trial family
    double rhs;           // norm-difference bound
    double slack_factor;  // 1 for constant p, 2 with variable exponents
};

/// Continuity of D(J) in the inner weight: lhs <= slack * rhs fails only
/// on a genuine defect. Both deviations are evaluated over one trial
/// family and one alpha window so the comparison is exact per trial.
PerturbationCheck perturb_u_bound(const Interval& j, const GridFunction& u1,
                                  const GridFunction& u2, const GridFunction& v,
                                  const SpaceSpec& sp,
                                  const DeviationOptions& opts = {});

/// Continuity in the outer weight; the bound carries the factor 3.
PerturbationCheck perturb_v_bound(const Interval& j, const GridFunction& u,
                                  const GridFunction& v1, const GridFunction& v2,
                                  const SpaceSpec& sp,
                                  const DeviationOptions& opts = {});

enum class StepNormMode { Space, Associate };

struct StepApproxResult {
    GridFunction fn;
    std::vector<double> breakpoints;
    double error;
    int pieces;
};

/// Smallest power-of-two equipartition step function (cell averages on
/// each piece) within eta of w in the requested norm. Throws when even
/// one piece per grid cell cannot reach eta.
StepApproxResult step_approximate(const GridFunction& w, double eta,
                                  StepNormMode mode, const SpaceSpec& sp);

}  // namespace hardysn
