// partition.cpp - epsilon-partitions and s-number asymptotics
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "hardysn/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardysn {

namespace {

// Norm figure of the candidate piece (lo, x): full operator norm from the
// left endpoint for the first piece, balanced one-sided norm afterwards.
double piece_value(double lo, double x, bool first, const WeightPair& w,
                   const SpaceSpec& sp, const PartitionOptions& opts) {
    if (first)
        return operator_norm_lower(OperatorSpec(Interval(lo, x), lo, w, sp),
                                   opts.equalize.ascent);
    return equalized_norm(Interval(lo, x), w, sp, opts.equalize);
}

}  // namespace

Partition build_partition(double eps, const Interval& i, const WeightPair& w,
                          const SpaceSpec& sp, const PartitionOptions& opts) {
    if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!w.u.interval().contains(i))
        throw std::invalid_argument("interval must lie inside the weight grid");
    const double h = w.u.h();
    Partition part;
    part.epsilon = eps;
    part.points.push_back(i.a);

    double prev_len = i.length();
    while (true) {
        if (part.count() >= opts.max_intervals)
            throw std::runtime_error("partition exceeds the interval cap");
        const bool first = part.pieces.empty();
        const double lo = part.points.back();
        const double rest = piece_value(lo, i.b, first, w, sp, opts);
        if (rest <= eps) {  // the remainder closes the partition
            part.points.push_back(i.b);
            part.pieces.push_back({Interval(lo, i.b),
                                   first ? PieceKind::FirstNorm : PieceKind::Balanced,
                                   rest});
            return part;
        }
        // Find the cut where the piece value meets eps. The discrete value
        // map jumps slightly whenever the cut crosses a cell midpoint, so
        // the bisection also accepts positional convergence and then takes
        // the inner bracket end, whose value is below eps by construction.
        double xlo = std::min(lo + h, i.b);
        double vlo = piece_value(lo, xlo, first, w, sp, opts);
        if (xlo >= i.b || vlo > eps)
            throw std::runtime_error("epsilon is below the grid resolution");
        double xhi = i.b;
        // warm probe at the previous piece length before bisecting
        double probe = lo + std::min(prev_len, 0.5 * (xhi - lo));
        if (probe > xlo && probe < xhi) {
            const double pv = piece_value(lo, probe, first, w, sp, opts);
            if (pv > eps) {
                xhi = probe;
            } else {
                xlo = probe;
                vlo = pv;
            }
        }
        double cut = xlo;
        double val = vlo;
        bool hit = false;
        for (int it = 0; it < opts.max_march_iter; ++it) {
            if (xhi - xlo <= 1e-3 * h) {
                cut = xlo;
                val = vlo;
                hit = true;
                break;
            }
            cut = 0.5 * (xlo + xhi);
            val = piece_value(lo, cut, first, w, sp, opts);
            if (std::abs(val - eps) <= opts.march_tol * eps) {
                hit = true;
                break;
            }
            if (val > eps) {
                xhi = cut;
            } else {
                xlo = cut;
                vlo = val;
            }
        }
        if (!hit) {
            // bracket still wider than the positional tolerance: settle for
            // the inner end rather than fail; the value error stays within
            // one midpoint-crossing jump of the target
            cut = xlo;
            val = vlo;
        }
        part.points.push_back(cut);
        part.pieces.push_back({Interval(lo, cut),
                               first ? PieceKind::FirstNorm : PieceKind::Balanced,
                               val});
        prev_len = cut - lo;
    }
}

EpsilonSolve solve_epsilon(int n, const Interval& i, const WeightPair& w,
                           const SpaceSpec& sp, const PartitionOptions& opts) {
    if (n < 1) throw std::invalid_argument("piece count must be at least 1");
    int marches = 0;
    auto count_at = [&](double eps) {
        ++marches;
        return build_partition(eps, i, w, sp, opts);
    };

    double hi = operator_norm_lower(OperatorSpec(i, i.a, w, sp), opts.full_norm);
    if (!(hi > 0.0)) throw std::runtime_error("operator norm estimate vanished");
    Partition at_hi = count_at(hi);
    if (n == 1) {
        // the norm itself is the count-1 boundary
        if (at_hi.count() != 1)
            at_hi = count_at(hi * (1.0 + 8.0 * opts.march_tol));
        return {at_hi.epsilon, at_hi, marches};
    }

    double lo = hi / (8.0 * n);
    Partition at_lo = count_at(lo);
    for (int tries = 0; at_lo.count() <= n; ++tries) {
        if (tries >= 50)
            throw std::runtime_error("cannot bracket the requested piece count");
        lo *= 0.5;
        at_lo = count_at(lo);
    }

    Partition best;
    bool have_best = at_hi.count() == n;
    if (have_best) best = at_hi;
    while (hi - lo > opts.eps_rel_tol * hi) {
        const double mid = std::sqrt(lo * hi);
        Partition pm = count_at(mid);
        if (pm.count() >= n + 1) {
            lo = mid;
        } else {
            hi = mid;
            if (pm.count() == n) {
                best = std::move(pm);
                have_best = true;
            }
        }
    }
    if (!have_best) {
        best = count_at(hi);
        if (best.count() != n)
            throw std::runtime_error("count stepped past the target; refine the "
                                     "grid or loosen tolerances");
    }
    return {best.epsilon, std::move(best), marches};
}

SNumberEstimate snum_estimate(int n, const Interval& i, const WeightPair& w,
                              const SpaceSpec& sp, double c_low, double c_up,
                              const PartitionOptions& opts) {
    if (!(c_low > 0.0) || !(c_up >= c_low))
        throw std::invalid_argument("estimate constants must satisfy 0 < c_low <= c_up");
    EpsilonSolve sol = solve_epsilon(n, i, w, sp, opts);
    SNumberEstimate est;
    est.n = n;
    est.epsilon = sol.epsilon;
    est.lower = c_low * sol.epsilon;
    est.upper = c_up * sol.epsilon;
    est.notes = "partition scale at the count boundary; equivalence constants "
                "are not sharp and default to 1; the bracket applies to the "
                "s-number family between isomorphism and approximation numbers";
    return est;
}

double gamma_factor(double p) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("exponent must satisfy 1 < p < inf");
    const double q = p / (p - 1.0);
    return std::pow(p, 1.0 / q) * std::pow(q, 1.0 / p) *
           std::sin(std::numbers::pi / p) / std::numbers::pi;
}

double variable_reference(const SpaceSpec& sp, const Interval& i) {
    if (sp.is_constant()) {
        return 0.5 * gamma_factor(sp.exponent()) * i.length();
    }
    const GridFunction& p = sp.exponents();
    if (!p.interval().contains(i))
        throw std::invalid_argument("interval must lie inside the exponent grid");
    CellRange cr = cells_over(p, i);
    double acc = 0.0;
    for (int k = cr.lo; k < cr.hi; ++k) {
        const double pk = p[k];
        const double qk = pk / (pk - 1.0);
        acc += std::pow(qk * std::pow(pk, pk - 1.0), 1.0 / pk) *
               std::sin(std::numbers::pi / pk) * cr.weight(k);
    }
    return acc / (2.0 * std::numbers::pi);
}

AsymptoteReport asymptote(const std::vector<int>& ns, const Interval& i,
                          const WeightPair& w, const SpaceSpec& sp,
                          const PartitionOptions& opts) {
    if (ns.empty()) throw std::invalid_argument("need at least one index");
    AsymptoteReport rep;
    rep.integral_uv = integrate(product(w.u, w.v), i);

    bool unit_weights = true;
    for (int k = 0; k < w.u.size(); ++k) {
        const double x = w.u.midpoint(k);
        if (x <= i.a || x >= i.b) continue;
        if (std::abs(w.u[k] - 1.0) > 1e-12 || std::abs(w.v[k] - 1.0) > 1e-12)
            unit_weights = false;
    }
    if (sp.is_constant()) {
        rep.reference = 0.5 * gamma_factor(sp.exponent()) * rep.integral_uv;
        rep.reference_kind = "half gamma_p * integral(u v)";
        rep.reference_only = false;
    } else {
        rep.reference = variable_reference(sp, i);
        rep.reference_kind = "unweighted variable-exponent limit";
        rep.reference_only = !unit_weights;
    }

    for (int n : ns) {
        EpsilonSolve sol = solve_epsilon(n, i, w, sp, opts);
        AsymptoteRow row;
        row.n = n;
        row.epsilon = sol.epsilon;
        row.n_eps = n * sol.epsilon;
        row.ratio = rep.reference > 0.0 ? row.n_eps / rep.reference : 0.0;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace hardysn
