// partition.hpp - epsilon-partitions and s-number asymptotics
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include "hardysn/approx_scale.hpp"

namespace hardysn {

struct PartitionOptions {
    double march_tol = 5e-4;    // relative tolerance on each cut's target value
    int max_march_iter = 80;    // bisection steps per cut
    double eps_rel_tol = 5e-4;  // relative bracket width when solving for epsilon
    int max_intervals = 4096;
    EqualizeOptions equalize{1e-4, 60, 1e-6, AscentOptions{12, 1e-10, 0, 0}};
    AscentOptions full_norm{30, 1e-11, 2, 2};  // for whole-interval norms
};

enum class PieceKind {
    FirstNorm,  // leftmost piece: operator norm from the left endpoint
    Balanced,   // interior and last pieces: balanced one-sided norm
};

struct PieceInfo {
    Interval j;
    PieceKind kind;
    double value;  // the piece's norm figure; <= epsilon on the last piece
};

struct Partition {
    double epsilon = 0.0;
    std::vector<double> points;     // N+1 cut points including both endpoints
    std::vector<PieceInfo> pieces;  // N entries

    int count() const { return static_cast<int>(pieces.size()); }
};

/// March from the left end: the first piece spends the full operator norm
/// up to epsilon, every further piece spends the balanced norm up to
/// epsilon, and the remainder closes the partition once its balanced norm
/// drops to epsilon or below. The piece count is the resolution figure
/// N(epsilon), nonincreasing in epsilon.
Partition build_partition(double eps, const Interval& i, const WeightPair& w,
                          const SpaceSpec& sp, const PartitionOptions& opts = {});

struct EpsilonSolve {
    double epsilon;  // boundary value where the count steps from n to n+1
    Partition partition;  // an n-piece partition at (just above) the boundary
    int marches;     // partitions built along the way
};

/// Solve N(epsilon) = n for the largest such epsilon by geometric
/// bisection between a count<=n value (the operator norm) and a
/// count>=n+1 value.
EpsilonSolve solve_epsilon(int n, const Interval& i, const WeightPair& w,
                           const SpaceSpec& sp, const PartitionOptions& opts = {});

struct SNumberEstimate {
    int n;
    double epsilon;
    double lower;
    double upper;
    std::string notes;
};

/// Two-sided s-number estimate at index n from the partition scale:
/// [c_low * eps_n, c_up * eps_n]. The default constants 1 report the raw
/// scale; the equivalence constants of the underlying estimates are not
/// sharp and the bracket applies to the whole standard s-number family
/// between the isomorphism and approximation numbers.
SNumberEstimate snum_estimate(int n, const Interval& i, const WeightPair& w,
                              const SpaceSpec& sp, double c_low = 1.0,
                              double c_up = 1.0,
                              const PartitionOptions& opts = {});

/// Asymptotic constant for L^p: (1/pi) p^{1/q} q^{1/p} sin(pi/p); the
/// limit of n * s_n(T) is half of this times integral(u v).
double gamma_factor(double p);

/// Unweighted variable-exponent limit of n * s_n:
/// (1/2pi) integral (q(x) p(x)^{p(x)-1})^{1/p(x)} sin(pi/p(x)) dx.
double variable_reference(const SpaceSpec& sp, const Interval& i);

struct AsymptoteRow {
    int n;
    double epsilon;
    double n_eps;
    double ratio;  // n_eps / reference
};

struct AsymptoteReport {
    std::vector<AsymptoteRow> rows;
    double integral_uv;
    double reference;
    std::string reference_kind;
    bool reference_only;  // formula quoted outside its validity (variable
                          // exponent with nonunit weights)
};

AsymptoteReport asymptote(const std::vector<int>& ns, const Interval& i,
                          const WeightPair& w, const SpaceSpec& sp,
                          const PartitionOptions& opts = {});

}  // namespace hardysn
