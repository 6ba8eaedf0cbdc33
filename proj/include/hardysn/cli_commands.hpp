// cli_commands.hpp - command implementations behind the hardysn CLI
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hardysn/operator.hpp"
#include "hardysn/report.hpp"

namespace hardysn::cli {

/// Materialize the core objects a command needs from the run config.
/// Profile sources accept "csv:PATH" or a builtin spec; the exponent
/// additionally accepts a plain real.
Interval config_interval(const RunConfig& cfg);
GridFunction load_profile(const std::string& spec, const Interval& iv, int m);
SpaceSpec config_space(const RunConfig& cfg);
WeightPair config_weights(const RunConfig& cfg);
OperatorSpec config_operator(const RunConfig& cfg);

/// Comma-separated strictly positive integers ("4,8,16").
std::vector<int> parse_n_list(const std::string& s);

CommandOutput cmd_norm(const RunConfig& cfg);
CommandOutput cmd_bound(const RunConfig& cfg);
CommandOutput cmd_compact(const RunConfig& cfg);
CommandOutput cmd_deviation(const RunConfig& cfg);  // subcommand "script-a"
CommandOutput cmd_equalize(const RunConfig& cfg);
CommandOutput cmd_partition(const RunConfig& cfg);
CommandOutput cmd_snum(const RunConfig& cfg);
CommandOutput cmd_oracle(const RunConfig& cfg);
CommandOutput cmd_asymptote(const RunConfig& cfg);

/// Full command-line entry point: parse argv, run the selected
/// subcommand, emit the report. Returns the process exit code
/// (0 iff the run produced no error records).
int run_cli(int argc, const char* const* argv, std::ostream& os);

}  // namespace hardysn::cli
