// detail.hpp - internal numeric helpers shared by the solver layers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <functional>

#include "hardysn/space.hpp"

namespace hardysn::detail {

/// Best value seen while golden-sectioning for a maximum on [lo, hi].
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  int iters);

struct MinResult {
    double arg;
    double value;
};

/// Best (arg, value) seen while golden-sectioning for a minimum.
MinResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                     int iters);

/// Pointwise |g|^{p-1} sgn(g) with the cell exponent (conjugate exponent
/// when conj is set): the duality map driving norm ascent.
GridFunction dual_map(const GridFunction& g, const SpaceSpec& sp, bool conj);

GridFunction scaled(const GridFunction& g, double c);

}  // namespace hardysn::detail
