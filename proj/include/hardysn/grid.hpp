// grid.hpp - uniform midpoint grids on a bounded interval
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hardysn {

/// Bounded open interval (a,b) with a < b, both finite.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_);

    double length() const { return b - a; }
    bool contains(double x) const { return x >= a && x <= b; }
    bool contains(const Interval& j) const { return j.a >= a && j.b <= b; }
    double clamp(double x) const;
    double midpoint() const { return 0.5 * (a + b); }
};

/// A scalar function sampled at the midpoints of M uniform cells of an
/// interval. The function is treated as constant on each cell, so integrals
/// over subintervals weight each cell by its overlap length and are
/// continuous in the subinterval endpoints.
class GridFunction {
  public:
    GridFunction(Interval iv, std::vector<double> samples);

    static GridFunction from_callable(Interval iv, int m,
                                      const std::function<double(double)>& f);
    static GridFunction constant(Interval iv, int m, double c);
    /// Resample tabulated values (strictly increasing x) onto the grid by
    /// linear interpolation; values outside the table hold the end values.
    static GridFunction from_table(Interval iv, int m,
                                   const std::vector<double>& xs,
                                   const std::vector<double>& vals);

    const Interval& interval() const { return interval_; }
    int size() const { return static_cast<int>(samples_.size()); }
    double h() const { return h_; }

    double cell_left(int i) const { return interval_.a + i * h_; }
    double cell_right(int i) const { return interval_.a + (i + 1) * h_; }
    double midpoint(int i) const { return interval_.a + (i + 0.5) * h_; }
    /// Index of the cell whose closed span contains x (clamped to range).
    int cell_of(double x) const;

    double operator[](int i) const { return samples_[i]; }
    double& operator[](int i) { return samples_[i]; }
    std::span<const double> samples() const { return samples_; }

    /// Value at a point, piecewise constant (endpoints clamp inward).
    double value_at(double x) const { return samples_[cell_of(x)]; }

    bool same_grid(const GridFunction& other) const;

    double max_abs() const;
    GridFunction map(const std::function<double(double)>& f) const;

  private:
    Interval interval_;
    double h_;
    std::vector<double> samples_;
};

/// The cells of a grid that meet a subinterval, with per-cell overlap
/// lengths. Cells outside [lo, hi) contribute weight zero.
struct CellRange {
    int lo = 0;
    int hi = 0;         // exclusive
    double h = 0.0;
    double j_lo = 0.0;  // clipped subinterval
    double j_hi = 0.0;
    double grid_a = 0.0;

    /// Overlap length of cell k with the subinterval, in [0, h].
    double weight(int k) const;
    bool empty() const { return lo >= hi; }
};

/// Cells of f's grid meeting J (clipped to f's interval).
CellRange cells_over(const GridFunction& f, const Interval& j);

/// Integral of f over J (cellwise constant model), clipped to f's interval.
double integrate(const GridFunction& f, const Interval& j);
double integrate(const GridFunction& f);

/// Pointwise product; both factors must live on the same grid.
GridFunction product(const GridFunction& f, const GridFunction& g);

/// cf * f + cg * g on a common grid.
GridFunction combine(const GridFunction& f, const GridFunction& g, double cf,
                     double cg);

/// Construct one of the builtin weight / exponent profiles on a grid:
///   const:<c>          constant c
///   pow:<beta>         x^beta (requires beta > -1 and interval in x >= 0)
///   exp:<k>            exp(k x)
///   sin:<A>,<omega>,<c>  c + A sin(omega x)
GridFunction make_builtin(const std::string& spec, Interval iv, int m);

/// Read a two-column CSV (header "x,value", strictly increasing x) and
/// resample onto the grid by linear interpolation.
GridFunction read_csv(const std::string& path, Interval iv, int m);
void write_csv(const GridFunction& f, const std::string& path);

}  // namespace hardysn
