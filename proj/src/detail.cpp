// detail.cpp - internal numeric helpers shared by the solver layers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "detail.hpp"

#include <cmath>
#include <vector>

namespace hardysn::detail {

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  int iters) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    double best = std::max(f1, f2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = f(x1);
        }
        best = std::max(best, std::max(f1, f2));
    }
    return best;
}

MinResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                     int iters) {
    MinResult best{0.0, 0.0};
    bool first = true;
    auto probe = [&](double x) {
        const double v = f(x);
        if (first || v < best.value) {
            best = {x, v};
            first = false;
        }
        return v;
    };
    golden_max([&](double x) { return -probe(x); }, lo, hi, iters);
    return best;
}

GridFunction dual_map(const GridFunction& g, const SpaceSpec& sp, bool conj) {
    auto power = [](double t, double e) {
        if (t == 0.0) return 0.0;
        const double m = std::pow(std::abs(t), e - 1.0);
        return t > 0 ? m : -m;
    };
    if (sp.is_constant()) {
        double e = sp.exponent();
        if (conj) e = e / (e - 1.0);
        return g.map([&, e](double t) { return power(t, e); });
    }
    const GridFunction& p = sp.exponents();
    std::vector<double> s(g.size());
    for (int i = 0; i < g.size(); ++i) {
        double e = p[i];
        if (conj) e = e / (e - 1.0);
        s[i] = power(g[i], e);
    }
    return GridFunction(g.interval(), std::move(s));
}

GridFunction scaled(const GridFunction& g, double c) {
    return g.map([c](double t) { return c * t; });
}

}  // namespace hardysn::detail
