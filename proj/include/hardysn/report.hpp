// report.hpp - run configuration and structured report emission
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace hardysn {

/// Everything a command run depends on. Weight and exponent sources are
/// either a builtin profile spec ("const:1", "pow:-0.25", "exp:1",
/// "sin:A,w,c"), "csv:PATH", or for the exponent a plain real.
struct RunConfig {
    double a = 0.0;
    double b = 1.0;
    std::string p = "2";
    std::string u = "const:1";
    std::string v = "const:1";
    int grid = 4096;
    unsigned seed = 1;
    double eps = 0.1;
    int n = 8;
    std::string n_list = "4,8,16";
    int depth = 8;
    int budget = 20;
    double c_low = 1.0;
    double c_up = 1.0;
    double k_upper = 4.0;  // upper bracket constant for variable exponents
    std::string out;       // structured report path, empty = none
    std::string csv;       // per-table CSV directory, empty = none
};

/// FNV-1a over the canonical config serialization; stable across runs.
std::uint64_t config_hash(const RunConfig& cfg);

/// The config block embedded in every report: all fields plus hash and
/// library version.
nlohmann::json config_json(const RunConfig& cfg, const std::string& command);

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

nlohmann::json table_json(const Table& t);
void print_table(std::ostream& os, const Table& t);
void write_table_csv(const Table& t, const std::string& dir);

struct CommandOutput {
    nlohmann::json results;
    std::vector<Table> tables;
};

/// Assemble the full report document {config, results, diagnostics},
/// print the human-readable summary, and honor --out / --csv.
/// Returns the process exit code (0 iff no error diagnostics).
int emit_report(const RunConfig& cfg, const std::string& command,
                const CommandOutput& out,
                const std::vector<std::string>& errors, std::ostream& os);

}  // namespace hardysn
