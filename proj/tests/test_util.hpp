// test_util.hpp - shared helpers for randomized test instances
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cmath>
#include <random>

#include "hardysn/grid.hpp"
#include "hardysn/operator.hpp"
#include "hardysn/space.hpp"

namespace hardysn::test {

/// Smooth, strictly positive random weight: the exponential of a short
/// random trigonometric sum, so norms stay well conditioned.
inline GridFunction random_weight(std::mt19937& rng, const Interval& iv, int m) {
    std::uniform_real_distribution<double> amp(-0.8, 0.8);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    const double a1 = amp(rng), a2 = 0.5 * amp(rng);
    const double f1 = phase(rng), f2 = phase(rng);
    return GridFunction::from_callable(iv, m, [=](double x) {
        return std::exp(a1 * std::sin(6.283185307179586 * x + f1) +
                        a2 * std::cos(12.566370614359172 * x + f2));
    });
}

inline WeightPair random_weights(std::mt19937& rng, const Interval& iv, int m) {
    GridFunction u = random_weight(rng, iv, m);
    GridFunction v = random_weight(rng, iv, m);
    return WeightPair(std::move(u), std::move(v));
}

inline SpaceSpec random_constant_space(std::mt19937& rng, double lo = 1.3,
                                       double hi = 4.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return SpaceSpec::constant(dist(rng));
}

/// Random subinterval of iv covering at least `min_frac` of its length.
inline Interval random_subinterval(std::mt19937& rng, const Interval& iv,
                                   double min_frac = 0.2) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double len = iv.length() * (min_frac + (1.0 - min_frac) * unit(rng));
    const double a = iv.a + (iv.length() - len) * unit(rng);
    return Interval(a, a + len);
}

/// Random bounded sample vector for trial functions.
inline GridFunction random_function(std::mt19937& rng, const Interval& iv,
                                    int m) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> s(static_cast<std::size_t>(m));
    for (double& x : s) x = dist(rng);
    return GridFunction(iv, std::move(s));
}

}  // namespace hardysn::test
