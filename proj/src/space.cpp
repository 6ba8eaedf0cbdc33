// space.cpp - Lebesgue spaces with constant or variable exponent
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "hardysn/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardysn {

namespace {
constexpr double kExponentCap = 1e6;
constexpr double kLambdaRelTol = 1e-11;
}  // namespace

SpaceSpec SpaceSpec::constant(double p) {
    if (!std::isfinite(p) || !(p > 1.0) || p > kExponentCap)
        throw std::invalid_argument("exponent must satisfy 1 < p < inf");
    SpaceSpec sp;
    sp.p_const_ = p;
    sp.p_min_ = p;
    sp.p_max_ = p;
    return sp;
}

SpaceSpec SpaceSpec::variable(GridFunction p) {
    double lo = p[0], hi = p[0];
    for (int i = 0; i < p.size(); ++i) {
        lo = std::min(lo, p[i]);
        hi = std::max(hi, p[i]);
    }
    if (!(lo > 1.0) || hi > kExponentCap)
        throw std::invalid_argument("exponent samples must satisfy 1 < p < inf");
    SpaceSpec sp;
    sp.exponents_ = std::move(p);
    sp.p_min_ = lo;
    sp.p_max_ = hi;
    return sp;
}

double SpaceSpec::exponent() const {
    if (!is_constant())
        throw std::logic_error("variable-exponent space has no single exponent");
    return p_const_;
}

const GridFunction& SpaceSpec::exponents() const {
    if (is_constant())
        throw std::logic_error("constant-exponent space has no exponent grid");
    return *exponents_;
}

SpaceSpec SpaceSpec::conjugate() const {
    if (is_constant()) return constant(p_const_ / (p_const_ - 1.0));
    return variable(exponents_->map([](double p) { return p / (p - 1.0); }));
}

namespace {

double constant_norm(const GridFunction& f, double p, const CellRange& cr) {
    if (p == 2.0) {
        double acc = 0.0;
        for (int k = cr.lo; k < cr.hi; ++k) acc += f[k] * f[k] * cr.weight(k);
        return std::sqrt(acc);
    }
    // factor out the peak so the powers stay in range for large p
    double peak = 0.0;
    for (int k = cr.lo; k < cr.hi; ++k) peak = std::max(peak, std::abs(f[k]));
    if (peak == 0.0) return 0.0;
    double acc = 0.0;
    for (int k = cr.lo; k < cr.hi; ++k)
        acc += std::pow(std::abs(f[k]) / peak, p) * cr.weight(k);
    return peak * std::pow(acc, 1.0 / p);
}

double modular(const GridFunction& f, const GridFunction& p, const CellRange& cr,
               double lambda) {
    double acc = 0.0;
    for (int k = cr.lo; k < cr.hi; ++k) {
        const double r = std::abs(f[k]) / lambda;
        if (r == 0.0) continue;
        acc += std::pow(r, p[k]) * cr.weight(k);
        if (acc > 4.0) return acc;  // already past the unit ball, no need to finish
    }
    return acc;
}

}  // namespace

double luxemburg_norm(const GridFunction& f, const SpaceSpec& sp, const Interval& j) {
    CellRange cr = cells_over(f, j);
    if (cr.empty()) return 0.0;
    if (sp.is_constant()) return constant_norm(f, sp.exponent(), cr);

    const GridFunction& p = sp.exponents();
    if (!f.same_grid(p))
        throw std::invalid_argument("variable exponent must share the function grid");
    double peak = 0.0;
    for (int k = cr.lo; k < cr.hi; ++k) peak = std::max(peak, std::abs(f[k]));
    if (peak == 0.0) return 0.0;

    const double measure = cr.j_hi - cr.j_lo;
    double hi = peak * std::pow(std::max(1.0, measure), 1.0 / sp.p_min());
    if (modular(f, p, cr, hi) > 1.0) {
        // roundoff can leave the analytic bracket a hair short
        do { hi *= 2.0; } while (modular(f, p, cr, hi) > 1.0);
    }
    double lo = 0.5 * hi;
    int guard = 0;
    while (modular(f, p, cr, lo) <= 1.0) {
        hi = lo;
        lo *= 0.5;
        if (++guard > 1100) return hi;  // subnormal territory, norm is ~0
    }
    while (hi - lo > kLambdaRelTol * hi) {
        const double mid = 0.5 * (lo + hi);
        if (modular(f, p, cr, mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

double luxemburg_norm(const GridFunction& f, const SpaceSpec& sp) {
    return luxemburg_norm(f, sp, f.interval());
}

double associate_norm(const GridFunction& g, const SpaceSpec& sp, const Interval& j) {
    return luxemburg_norm(g, sp.conjugate(), j);
}

double associate_norm(const GridFunction& g, const SpaceSpec& sp) {
    return associate_norm(g, sp, g.interval());
}

double holder_defect(const GridFunction& f, const GridFunction& g,
                     const SpaceSpec& sp, const Interval& j) {
    if (!f.same_grid(g))
        throw std::invalid_argument("holder_defect requires a common grid");
    CellRange cr = cells_over(f, j);
    double pairing = 0.0;
    for (int k = cr.lo; k < cr.hi; ++k)
        pairing += std::abs(f[k] * g[k]) * cr.weight(k);
    const double nf = luxemburg_norm(f, sp, j);
    const double ng = associate_norm(g, sp, j);
    if (nf == 0.0 || ng == 0.0) return 0.0;
    return pairing / (nf * ng);
}

double muckenhoupt_constant(const SpaceSpec& sp, const Interval& i, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    int m = 2;
    if (!sp.is_constant()) {
        const GridFunction& p = sp.exponents();
        if (!i.contains(p.interval()) || !p.interval().contains(i))
            throw std::invalid_argument("interval must match the exponent grid");
        m = p.size();
    } else {
        m = std::max(2, 1 << std::min(depth + 2, 14));
    }
    GridFunction one = GridFunction::constant(i, m, 1.0);
    const SpaceSpec conj = sp.conjugate();
    const double len = i.length();
    double best = 0.0;
    for (int level = 0; level <= depth; ++level) {
        const double w = len / static_cast<double>(1 << level);
        const double stride = (level == 0) ? len : w / 4.0;
        for (int k = 0;; ++k) {
            const double lo = i.a + k * stride;
            const double hi = lo + w;
            if (hi > i.b + 1e-12 * len) break;
            Interval j(lo, std::min(hi, i.b));
            const double nf = luxemburg_norm(one, sp, j);
            const double ng = luxemburg_norm(one, conj, j);
            best = std::max(best, nf * ng / j.length());
            if (level == 0) break;
        }
    }
    return best;
}

LogHolderReport log_holder_check(const GridFunction& p) {
    const double e = std::exp(1.0);
    double c = 0.0;
    double lo = p[0], hi = p[0];
    const int m = p.size();
    for (int i = 0; i < m; ++i) {
        lo = std::min(lo, p[i]);
        hi = std::max(hi, p[i]);
        const double xi = p.midpoint(i);
        for (int j = i + 1; j < m; ++j) {
            const double d = p.midpoint(j) - xi;
            if (d > 0.5) break;
            c = std::max(c, std::abs(p[i] - p[j]) * std::log(e + 1.0 / d));
        }
    }
    LogHolderReport rep;
    rep.constant = c;
    rep.pass = std::isfinite(c) && lo > 1.0 && std::isfinite(hi);
    return rep;
}

}  // namespace hardysn
