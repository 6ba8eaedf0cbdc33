// report.cpp - run configuration and structured report emission
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "hardysn/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#ifndef HARDYSN_VERSION
#define HARDYSN_VERSION "0.1.0"
#endif

namespace hardysn {

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_cell(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

std::string canonical_config(const RunConfig& c) {
    std::string s;
    s += "a=" + fmt_double(c.a);
    s += ";b=" + fmt_double(c.b);
    s += ";p=" + c.p;
    s += ";u=" + c.u;
    s += ";v=" + c.v;
    s += ";grid=" + std::to_string(c.grid);
    s += ";seed=" + std::to_string(c.seed);
    s += ";eps=" + fmt_double(c.eps);
    s += ";n=" + std::to_string(c.n);
    s += ";n_list=" + c.n_list;
    s += ";depth=" + std::to_string(c.depth);
    s += ";budget=" + std::to_string(c.budget);
    s += ";c_low=" + fmt_double(c.c_low);
    s += ";c_up=" + fmt_double(c.c_up);
    s += ";k_upper=" + fmt_double(c.k_upper);
    return s;
}

}  // namespace

std::uint64_t config_hash(const RunConfig& cfg) {
    const std::string s = canonical_config(cfg);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

nlohmann::json config_json(const RunConfig& cfg, const std::string& command) {
    nlohmann::json j;
    j["command"] = command;
    j["a"] = cfg.a;
    j["b"] = cfg.b;
    j["p"] = cfg.p;
    j["u"] = cfg.u;
    j["v"] = cfg.v;
    j["grid"] = cfg.grid;
    j["seed"] = cfg.seed;
    j["eps"] = cfg.eps;
    j["n"] = cfg.n;
    j["n_list"] = cfg.n_list;
    j["depth"] = cfg.depth;
    j["budget"] = cfg.budget;
    j["c_low"] = cfg.c_low;
    j["c_up"] = cfg.c_up;
    j["k_upper"] = cfg.k_upper;
    char hash[24];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(config_hash(cfg)));
    j["hash"] = hash;
    j["version"] = HARDYSN_VERSION;
    return j;
}

nlohmann::json table_json(const Table& t) {
    nlohmann::json j;
    j["name"] = t.name;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    return j;
}

void print_table(std::ostream& os, const Table& t) {
    os << t.name << ":\n";
    // Column widths from header and formatted cells.
    std::vector<std::size_t> width(t.columns.size());
    std::vector<std::vector<std::string>> cells(t.rows.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        width[c] = t.columns[c].size();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        cells[r].resize(t.rows[r].size());
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            cells[r][c] = fmt_cell(t.rows[r][c]);
            if (c < width.size() && cells[r][c].size() > width[c])
                width[c] = cells[r][c].size();
        }
    }
    auto pad = [&os](const std::string& s, std::size_t w) {
        for (std::size_t i = s.size(); i < w; ++i) os << ' ';
        os << s;
    };
    os << " ";
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) os << "  ";
        pad(t.columns[c], width[c]);
    }
    os << "\n";
    for (const auto& row : cells) {
        os << " ";
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << "  ";
            pad(row[c], c < width.size() ? width[c] : 0);
        }
        os << "\n";
    }
}

void write_table_csv(const Table& t, const std::string& dir) {
    const std::string path = dir + "/" + t.name + ".csv";
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open CSV output " + path);
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) os << ",";
        os << t.columns[c];
    }
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ",";
            os << fmt_double(row[c]);
        }
        os << "\n";
    }
    if (!os) throw std::runtime_error("failed writing CSV output " + path);
}

int emit_report(const RunConfig& cfg, const std::string& command,
                const CommandOutput& out,
                const std::vector<std::string>& errors, std::ostream& os) {
    nlohmann::json doc;
    doc["config"] = config_json(cfg, command);
    doc["results"] = out.results;
    nlohmann::json tables = nlohmann::json::array();
    for (const auto& t : out.tables) tables.push_back(table_json(t));
    doc["results"]["tables"] = std::move(tables);
    nlohmann::json diags = nlohmann::json::array();
    for (const auto& e : errors)
        diags.push_back({{"severity", "error"}, {"message", e}});
    doc["diagnostics"] = std::move(diags);

    // Human-readable summary.
    os << command << " report (hash " << doc["config"]["hash"].get<std::string>()
       << ")\n";
    for (auto it = out.results.begin(); it != out.results.end(); ++it) {
        os << "  " << it.key() << " = ";
        if (it.value().is_number_float())
            os << fmt_cell(it.value().get<double>());
        else
            os << it.value().dump();
        os << "\n";
    }
    for (const auto& t : out.tables) print_table(os, t);
    for (const auto& e : errors) os << "error: " << e << "\n";

    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out);
        if (!f) throw std::runtime_error("cannot open report output " + cfg.out);
        f << doc.dump(2) << "\n";
    }
    if (!cfg.csv.empty())
        for (const auto& t : out.tables) write_table_csv(t, cfg.csv);

    return errors.empty() ? 0 : 1;
}

}  // namespace hardysn
