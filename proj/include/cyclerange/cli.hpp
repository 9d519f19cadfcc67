#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclerange/weights.hpp"

namespace cyclerange::cli {

/// Executes one CLI invocation.  Exit codes: 0 success, 1 failed verdict
/// on verify-style subcommands, 2 validation/usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "1,2.5,3" or "sq:0,3,4" (squared weights, kept exact).
WeightVector parse_weights(const std::string& text);

}  // namespace cyclerange::cli
