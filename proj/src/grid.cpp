// grid.cpp - uniform midpoint grids on a bounded interval
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "hardysn/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hardysn {

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("interval endpoints must be finite");
    if (!(a < b))
        throw std::invalid_argument("interval requires a < b");
}

double Interval::clamp(double x) const { return std::min(b, std::max(a, x)); }

GridFunction::GridFunction(Interval iv, std::vector<double> samples)
    : interval_(iv), samples_(std::move(samples)) {
    if (samples_.size() < 2)
        throw std::invalid_argument("grid needs at least 2 cells");
    for (double s : samples_)
        if (!std::isfinite(s))
            throw std::invalid_argument("grid samples must be finite");
    h_ = interval_.length() / static_cast<double>(samples_.size());
}

GridFunction GridFunction::from_callable(Interval iv, int m,
                                         const std::function<double(double)>& f) {
    if (m < 2) throw std::invalid_argument("grid needs at least 2 cells");
    std::vector<double> s(m);
    const double h = iv.length() / m;
    for (int i = 0; i < m; ++i) s[i] = f(iv.a + (i + 0.5) * h);
    return GridFunction(iv, std::move(s));
}

GridFunction GridFunction::constant(Interval iv, int m, double c) {
    if (m < 2) throw std::invalid_argument("grid needs at least 2 cells");
    return GridFunction(iv, std::vector<double>(m, c));
}

GridFunction GridFunction::from_table(Interval iv, int m,
                                      const std::vector<double>& xs,
                                      const std::vector<double>& vals) {
    if (xs.empty() || xs.size() != vals.size())
        throw std::invalid_argument("table needs matching nonempty columns");
    for (size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::invalid_argument("table x column must be strictly increasing");
    auto interp = [&](double x) {
        if (x <= xs.front()) return vals.front();
        if (x >= xs.back()) return vals.back();
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        size_t k = static_cast<size_t>(it - xs.begin());
        double t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
        return vals[k - 1] + t * (vals[k] - vals[k - 1]);
    };
    return from_callable(iv, m, interp);
}

int GridFunction::cell_of(double x) const {
    int i = static_cast<int>(std::floor((x - interval_.a) / h_));
    return std::min(size() - 1, std::max(0, i));
}

bool GridFunction::same_grid(const GridFunction& other) const {
    return size() == other.size() && interval_.a == other.interval_.a &&
           interval_.b == other.interval_.b;
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double s : samples_) m = std::max(m, std::abs(s));
    return m;
}

GridFunction GridFunction::map(const std::function<double(double)>& f) const {
    std::vector<double> s(samples_.begin(), samples_.end());
    for (double& x : s) x = f(x);
    return GridFunction(interval_, std::move(s));
}

double CellRange::weight(int k) const {
    const double l = grid_a + k * h;
    const double r = l + h;
    return std::max(0.0, std::min(j_hi, r) - std::max(j_lo, l));
}

CellRange cells_over(const GridFunction& f, const Interval& j) {
    CellRange cr;
    cr.h = f.h();
    cr.grid_a = f.interval().a;
    cr.j_lo = std::max(j.a, f.interval().a);
    cr.j_hi = std::min(j.b, f.interval().b);
    if (!(cr.j_lo < cr.j_hi)) return cr;  // empty
    cr.lo = f.cell_of(cr.j_lo);
    cr.hi = f.cell_of(cr.j_hi) + 1;
    // drop boundary cells with zero overlap so loops never see weight 0 ends
    if (cr.weight(cr.lo) <= 0.0) ++cr.lo;
    if (cr.hi > cr.lo && cr.weight(cr.hi - 1) <= 0.0) --cr.hi;
    return cr;
}

double integrate(const GridFunction& f, const Interval& j) {
    CellRange cr = cells_over(f, j);
    double acc = 0.0;
    for (int k = cr.lo; k < cr.hi; ++k) acc += f[k] * cr.weight(k);
    return acc;
}

double integrate(const GridFunction& f) { return integrate(f, f.interval()); }

GridFunction product(const GridFunction& f, const GridFunction& g) {
    if (!f.same_grid(g))
        throw std::invalid_argument("product requires a common grid");
    std::vector<double> s(f.size());
    for (int i = 0; i < f.size(); ++i) s[i] = f[i] * g[i];
    return GridFunction(f.interval(), std::move(s));
}

GridFunction combine(const GridFunction& f, const GridFunction& g, double cf,
                     double cg) {
    if (!f.same_grid(g))
        throw std::invalid_argument("combine requires a common grid");
    std::vector<double> s(f.size());
    for (int i = 0; i < f.size(); ++i) s[i] = cf * f[i] + cg * g[i];
    return GridFunction(f.interval(), std::move(s));
}

namespace {

std::vector<double> parse_params(const std::string& text, size_t want,
                                 const std::string& spec) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        double val;
        try {
            val = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad numeric parameter in '" + spec + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
            ++pos;
        if (pos != tok.size())
            throw std::invalid_argument("bad numeric parameter in '" + spec + "'");
        out.push_back(val);
    }
    if (out.size() != want)
        throw std::invalid_argument("wrong parameter count in '" + spec + "'");
    return out;
}

}  // namespace

GridFunction make_builtin(const std::string& spec, Interval iv, int m) {
    const size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("builtin spec needs 'name:params': " + spec);
    const std::string name = spec.substr(0, colon);
    const std::string params = spec.substr(colon + 1);
    if (name == "const") {
        double c = parse_params(params, 1, spec)[0];
        return GridFunction::constant(iv, m, c);
    }
    if (name == "pow") {
        double beta = parse_params(params, 1, spec)[0];
        if (!(beta > -1.0))
            throw std::invalid_argument("pow exponent must exceed -1");
        if (iv.a < 0.0)
            throw std::invalid_argument("pow profile needs interval in x >= 0");
        return GridFunction::from_callable(iv, m,
                                           [beta](double x) { return std::pow(x, beta); });
    }
    if (name == "exp") {
        double k = parse_params(params, 1, spec)[0];
        return GridFunction::from_callable(iv, m,
                                           [k](double x) { return std::exp(k * x); });
    }
    if (name == "sin") {
        auto p = parse_params(params, 3, spec);
        const double amp = p[0], omega = p[1], off = p[2];
        return GridFunction::from_callable(iv, m, [=](double x) {
            return off + amp * std::sin(omega * x);
        });
    }
    throw std::invalid_argument("unknown builtin profile '" + name + "'");
}

GridFunction read_csv(const std::string& path, Interval iv, int m) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open CSV file: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty CSV file: " + path);
    // tolerate UTF-8 BOM and whitespace around the header
    std::string header;
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) header += c;
    if (header.size() >= 3 && header.compare(0, 3, "\xEF\xBB\xBF") == 0)
        header = header.substr(3);
    if (header != "x,value")
        throw std::invalid_argument("CSV header must be 'x,value': " + path);
    std::vector<double> xs, vals;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        std::stringstream ss(line);
        std::string xa, xb;
        if (!std::getline(ss, xa, ',') || !std::getline(ss, xb))
            throw std::invalid_argument("bad CSV row " + std::to_string(lineno) +
                                        " in " + path);
        try {
            xs.push_back(std::stod(xa));
            vals.push_back(std::stod(xb));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad CSV row " + std::to_string(lineno) +
                                        " in " + path);
        }
    }
    if (xs.empty()) throw std::invalid_argument("CSV has no data rows: " + path);
    if (xs.size() == 1) return GridFunction::constant(iv, m, vals[0]);
    return GridFunction::from_table(iv, m, xs, vals);
}

void write_csv(const GridFunction& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open CSV for writing: " + path);
    out << "x,value\n";
    char buf[64];
    for (int i = 0; i < f.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", f.midpoint(i), f[i]);
        out << buf;
    }
}

}  // namespace hardysn
