// space.hpp - Lebesgue spaces with constant or variable exponent
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <optional>

#include "hardysn/grid.hpp"

namespace hardysn {

/// Exponent data for an L^p or L^{p(.)} space. The constant case carries a
/// single exponent in (1, inf); the variable case carries a grid of cell
/// exponents with 1 < p_min <= p_max < inf. For a variable exponent the
/// associate norm computed here (Luxemburg norm of the conjugate exponent)
/// agrees with the true associate norm only up to a factor of 2; operations
/// that report norms expose this through an associate_caveat flag.
class SpaceSpec {
  public:
    static SpaceSpec constant(double p);
    static SpaceSpec variable(GridFunction p);

    bool is_constant() const { return !exponents_.has_value(); }
    double exponent() const;
    const GridFunction& exponents() const;

    double p_min() const { return p_min_; }
    double p_max() const { return p_max_; }

    /// Conjugate space: 1/p + 1/q = 1 cellwise.
    SpaceSpec conjugate() const;

    /// True when norms in the associate space are only two-sided estimates.
    bool associate_caveat() const { return !is_constant(); }

  private:
    SpaceSpec() = default;
    std::optional<GridFunction> exponents_;
    double p_const_ = 2.0;
    double p_min_ = 2.0;
    double p_max_ = 2.0;
};

/// Luxemburg norm of f over J: inf { l > 0 : integral (|f|/l)^p(x) <= 1 }.
/// Exact closed form for constant p; bisection on the modular otherwise
/// (relative tolerance 1e-11 on l). Variable exponents must share f's grid.
double luxemburg_norm(const GridFunction& f, const SpaceSpec& sp, const Interval& j);
double luxemburg_norm(const GridFunction& f, const SpaceSpec& sp);

/// Norm of g in the associate space (conjugate-exponent Luxemburg norm).
double associate_norm(const GridFunction& g, const SpaceSpec& sp, const Interval& j);
double associate_norm(const GridFunction& g, const SpaceSpec& sp);

/// integral |f g| / (||f|| ||g||'), at most 1 for constant p and at most 2
/// in the variable case; 0 when either norm vanishes.
double holder_defect(const GridFunction& f, const GridFunction& g,
                     const SpaceSpec& sp, const Interval& j);

/// Empirical Muckenhoupt-class constant: the largest value of
/// ||chi_J|| ||chi_J||' / |J| over dyadic subintervals of I down to the
/// given depth together with sliding windows of the same widths at stride
/// width/4. Equals 1 (up to roundoff) for constant p.
double muckenhoupt_constant(const SpaceSpec& sp, const Interval& i, int depth);

struct LogHolderReport {
    double constant;  // smallest empirical C with |p(x)-p(y)| <= C / log(e+1/|x-y|)
    bool pass;        // C finite and 1 < p_min <= p_max < inf
};

/// Scan all sample pairs with |x - y| <= 1/2. A genuine modulus-of-
/// continuity failure (e.g. a jump) shows up as growth of the constant
/// under grid refinement, which callers detect by comparing resolutions.
LogHolderReport log_holder_check(const GridFunction& p);

}  // namespace hardysn
