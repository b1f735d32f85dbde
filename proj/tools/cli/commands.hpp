#pragma once

#include <string>
#include <vector>

namespace elastic::cli {

/// Parses and runs one CLI invocation (argv without the program name).
/// Exit codes: 0 success, 1 I/O error, 2 invalid configuration,
/// 3 solver failure (match) or too many failed pairs (distmat).
int run_cli(const std::vector<std::string>& args);

}  // namespace elastic::cli
