#pragma once

#include <string>
#include <vector>

namespace gradedpi::cli {

struct CliResult {
  int exit_code = 0;   // 0 success, 1 strict failure, 2 usage error
  std::string output;  // JSON document or help text, for stdout
  std::string error;   // diagnostics, for stderr
};

/// Runs one gradedpi invocation. `args` excludes the program name.
/// Subcommands: analyze, check, enumerate, classify, goodseq, reduce.
CliResult dispatch(const std::vector<std::string>& args);

}  // namespace gradedpi::cli
