// operator.cpp - weighted Hardy-type integral operator on an interval
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "hardysn/operator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "detail.hpp"

namespace hardysn {

using detail::dual_map;
using detail::golden_max;
using detail::scaled;

WeightPair::WeightPair(GridFunction u_, GridFunction v_, double floor)
    : u(std::move(u_)), v(std::move(v_)) {
    if (!u.same_grid(v))
        throw std::invalid_argument("weights must share one grid");
    if (!(floor > 0.0))
        throw std::invalid_argument("weight floor must be positive");
    for (const GridFunction* w : {&u, &v})
        for (int i = 0; i < w->size(); ++i)
            if ((*w)[i] <= 0.0)
                throw std::invalid_argument("weights must be strictly positive");
    auto clamp = [floor](double x) { return std::max(x, floor); };
    u = u.map(clamp);
    v = v.map(clamp);
}

OperatorSpec::OperatorSpec(Interval j, double base_, WeightPair w, SpaceSpec sp)
    : domain(j), base(base_), weights(std::move(w)), space(std::move(sp)) {
    if (!weights.u.interval().contains(domain))
        throw std::invalid_argument("domain must lie inside the weight grid");
    if (!(base >= domain.a && base <= domain.b))
        throw std::invalid_argument("base point must lie in closure(domain)");
    if (!space.is_constant() && !space.exponents().same_grid(weights.u))
        throw std::invalid_argument("variable exponent must live on the weight grid");
}

OperatorSpec OperatorSpec::restricted(Interval j, double base_) const {
    if (!domain.contains(j))
        throw std::invalid_argument("restriction must stay inside the domain");
    return OperatorSpec(j, base_, weights, space);
}

namespace {

// Prefix integrals of u*f over J starting at J's left end, exact for the
// cellwise-constant model, so the map x -> P(x) is continuous and piecewise
// linear. pref[k - cr.lo] holds P at the left edge of cell k's overlap.
struct Prefix {
    CellRange cr;
    std::vector<double> pref;

    Prefix(const GridFunction& w, const GridFunction& f, const Interval& j)
        : cr(cells_over(w, j)) {
        pref.resize(std::max(0, cr.hi - cr.lo) + 1, 0.0);
        double run = 0.0;
        for (int k = cr.lo; k < cr.hi; ++k) {
            pref[k - cr.lo] = run;
            run += w[k] * f[k] * cr.weight(k);
        }
        pref[std::max(0, cr.hi - cr.lo)] = run;
    }

    double total() const { return pref.empty() ? 0.0 : pref.back(); }

    // P(x) for x in [j_lo, j_hi]; needs the owning weight grid for geometry.
    double at(const GridFunction& w, const GridFunction& f, double x) const {
        if (cr.empty()) return 0.0;
        if (x <= cr.j_lo) return 0.0;
        if (x >= cr.j_hi) return total();
        int k = std::min(cr.hi - 1, std::max(cr.lo, w.cell_of(x)));
        const double ol = std::max(cr.j_lo, w.cell_left(k));
        return pref[k - cr.lo] + w[k] * f[k] * std::max(0.0, x - ol);
    }
};

}  // namespace

GridFunction apply(const OperatorSpec& op, const GridFunction& f) {
    const GridFunction& u = op.weights.u;
    const GridFunction& v = op.weights.v;
    if (!f.same_grid(u))
        throw std::invalid_argument("argument must live on the weight grid");
    Prefix p(u, f, op.domain);
    std::vector<double> out(u.size(), 0.0);
    if (!p.cr.empty()) {
        const double at_base = p.at(u, f, op.base);
        for (int k = p.cr.lo; k < p.cr.hi; ++k) {
            // evaluate at the midpoint of the cell's overlap with the domain,
            // so the output varies continuously as the domain endpoints move
            // across a cell (interior cells keep their plain midpoint)
            const double lo = std::max(p.cr.j_lo, u.cell_left(k));
            const double hi = std::min(p.cr.j_hi, u.cell_left(k) + u.h());
            if (!(hi > lo)) continue;
            const double x = 0.5 * (lo + hi);
            out[k] = v[k] * (p.at(u, f, x) - at_base);
        }
    }
    return GridFunction(u.interval(), std::move(out));
}

GridFunction apply_adjoint(const OperatorSpec& op, const GridFunction& g) {
    const GridFunction& u = op.weights.u;
    const GridFunction& v = op.weights.v;
    if (!g.same_grid(u))
        throw std::invalid_argument("argument must live on the weight grid");
    Prefix p(v, g, op.domain);
    std::vector<double> out(u.size(), 0.0);
    if (!p.cr.empty()) {
        const double total = p.total();
        for (int k = p.cr.lo; k < p.cr.hi; ++k) {
            // overlap midpoint, as in apply: continuous in the endpoints
            const double lo = std::max(p.cr.j_lo, u.cell_left(k));
            const double hi = std::min(p.cr.j_hi, u.cell_left(k) + u.h());
            if (!(hi > lo)) continue;
            const double x = 0.5 * (lo + hi);
            const double q = p.at(v, g, x);
            out[k] = u[k] * (x >= op.base ? total - q : -q);
        }
    }
    return GridFunction(u.interval(), std::move(out));
}

double a_profile(const OperatorSpec& op, double t) {
    if (!(t >= op.domain.a && t <= op.domain.b))
        throw std::invalid_argument("profile point must lie in closure(domain)");
    const SpaceSpec conj = op.space.conjugate();
    auto seg = [](const GridFunction& w, const SpaceSpec& sp, double lo, double hi) {
        if (!(lo < hi)) return 0.0;
        return luxemburg_norm(w, sp, Interval(lo, hi));
    };
    if (t >= op.base)  // forward piece (base, J.b)
        return seg(op.weights.v, op.space, t, op.domain.b) *
               seg(op.weights.u, conj, op.base, t);
    // backward piece (J.a, base)
    return seg(op.weights.v, op.space, op.domain.a, t) *
           seg(op.weights.u, conj, t, op.base);
}

namespace {

SupResult scan_profile(const OperatorSpec& op, double lo, double hi, int points) {
    std::vector<double> vals(points + 1);
    double best = -1.0;
    int ibest = 0;
    for (int i = 0; i <= points; ++i) {
        const double t = lo + (hi - lo) * i / points;
        vals[i] = a_profile(op, t);
        if (vals[i] > best) {
            best = vals[i];
            ibest = i;
        }
    }
    // polish around the three best scan values
    std::vector<int> order(points + 1);
    for (int i = 0; i <= points; ++i) order[i] = i;
    std::partial_sort(order.begin(), order.begin() + std::min(3, points + 1),
                      order.end(), [&](int a, int b) { return vals[a] > vals[b]; });
    SupResult res{best, lo + (hi - lo) * ibest / points};
    for (int r = 0; r < std::min(3, points + 1); ++r) {
        const int i = order[r];
        const double wl = lo + (hi - lo) * std::max(0, i - 1) / points;
        const double wr = lo + (hi - lo) * std::min(points, i + 1) / points;
        double warg = 0.5 * (wl + wr);
        double wbest = -1.0;
        golden_max(
            [&](double t) {
                const double a = a_profile(op, t);
                if (a > wbest) {
                    wbest = a;
                    warg = t;
                }
                return a;
            },
            wl, wr, 36);
        if (wbest > res.value) res = {wbest, warg};
    }
    return res;
}

}  // namespace

SupResult a_sup(const OperatorSpec& op) {
    const bool interior = !op.base_at_left() && !op.base_at_right();
    if (!interior) return scan_profile(op, op.domain.a, op.domain.b, 256);
    SupResult l = scan_profile(op, op.domain.a, op.base, 128);
    SupResult r = scan_profile(op, op.base, op.domain.b, 128);
    return l.value >= r.value ? l : r;
}

namespace {

double ratio_of(const OperatorSpec& op, const GridFunction& f) {
    const double nf = luxemburg_norm(f, op.space, op.domain);
    if (nf == 0.0) return 0.0;
    return luxemburg_norm(apply(op, f), op.space, op.domain) / nf;
}

}  // namespace

double operator_norm_lower(const OperatorSpec& op, const AscentOptions& opts) {
    const Interval& j = op.domain;
    const GridFunction& u = op.weights.u;
    double best = 0.0;

    for (int level = 0; level <= opts.indicator_levels; ++level) {
        const int n = 1 << level;
        for (int k = 0; k < n; ++k) {
            Interval q(j.a + j.length() * k / n, j.a + j.length() * (k + 1) / n);
            std::vector<double> s(u.size(), 0.0);
            bool any = false;
            for (int i = 0; i < u.size(); ++i) {
                const double x = u.midpoint(i);
                if (x > q.a && x < q.b) {
                    s[i] = 1.0;
                    any = true;
                }
            }
            if (!any) continue;
            best = std::max(best, ratio_of(op, GridFunction(u.interval(), std::move(s))));
        }
    }

    std::vector<GridFunction> starts;
    starts.push_back(u);
    starts.push_back(GridFunction::constant(u.interval(), u.size(), 1.0));
    if (opts.restarts > 0) {
        std::mt19937 rng(opts.seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int r = 0; r < opts.restarts; ++r) {
            constexpr int kPieces = 12;
            std::vector<double> level(kPieces);
            for (double& x : level) x = dist(rng);
            std::vector<double> s(u.size(), 0.0);
            for (int i = 0; i < u.size(); ++i) {
                const double x = u.midpoint(i);
                if (x <= j.a || x >= j.b) continue;
                int k = static_cast<int>((x - j.a) / j.length() * kPieces);
                s[i] = level[std::min(kPieces - 1, std::max(0, k))];
            }
            starts.emplace_back(u.interval(), std::move(s));
        }
    }
    for (GridFunction f : starts) {
        double nf = luxemburg_norm(f, op.space, j);
        if (nf == 0.0) continue;
        f = scaled(f, 1.0 / nf);
        int flat = 0;
        for (int round = 0; round < opts.rounds; ++round) {
            GridFunction g = apply(op, f);
            const double r = luxemburg_norm(g, op.space, j);
            if (r > best * (1.0 + opts.rel_stop))
                flat = 0;
            else if (++flat >= 3)
                break;
            best = std::max(best, r);
            const double gm = g.max_abs();
            if (gm == 0.0) break;
            GridFunction phi = dual_map(scaled(g, 1.0 / gm), op.space, false);
            GridFunction h = apply_adjoint(op, phi);
            const double hm = h.max_abs();
            if (hm == 0.0) break;
            f = dual_map(scaled(h, 1.0 / hm), op.space, true);
            nf = luxemburg_norm(f, op.space, j);
            if (nf == 0.0) break;
            f = scaled(f, 1.0 / nf);
        }
    }
    return best;
}

double norm_upper_factor(const SpaceSpec& sp, double k_variable) {
    if (sp.is_constant()) {
        const double p = sp.exponent();
        const double q = p / (p - 1.0);
        return std::pow(p, 1.0 / p) * std::pow(q, 1.0 / q);
    }
    if (!(k_variable >= 1.0))
        throw std::invalid_argument("upper factor must be at least 1");
    return k_variable;
}

NormBracket norm_bracket(const OperatorSpec& op, double k_variable,
                         const AscentOptions& opts) {
    const SupResult s = a_sup(op);
    const double lower = std::max(s.value, operator_norm_lower(op, opts));
    double factor = norm_upper_factor(op.space, k_variable);
    std::string method;
    if (op.space.is_constant()) {
        method = "K = p^{1/p} q^{1/q}";
    } else {
        method = "K = " + std::to_string(k_variable) + " (heuristic, variable exponent)";
        if (!op.base_at_left() && !op.base_at_right()) {
            factor *= 2.0;  // two one-sided pieces glued at the base
            method += ", x2 interior base";
        }
    }
    double upper = factor * s.value;
    if (upper < lower) {
        upper = lower;
        method += ", widened to the certified lower bound";
    }
    return NormBracket{lower, upper, method};
}

CompactnessProfile compactness_profile(const OperatorSpec& op, int n_points) {
    if (n_points < 1 || n_points > 48)
        throw std::invalid_argument("profile wants 1..48 points");
    CompactnessProfile prof;
    const Interval& j = op.domain;
    const double len = j.length();
    for (int i = 1; i <= n_points; ++i) {
        const double tail = len * std::pow(2.0, -i);
        const double xl = j.a + tail;
        const double xr = j.b - tail;
        prof.x_left.push_back(xl);
        prof.left.push_back(a_sup(op.restricted(Interval(j.a, xl), j.a)).value);
        prof.x_right.push_back(xr);
        prof.right.push_back(a_sup(op.restricted(Interval(xr, j.b), xr)).value);
    }
    return prof;
}

}  // namespace hardysn
