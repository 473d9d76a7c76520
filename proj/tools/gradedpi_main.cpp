#include <iostream>
#include <string>
#include <vector>

#include "gradedpi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const gradedpi::cli::CliResult result = gradedpi::cli::dispatch(args);
  if (!result.output.empty()) std::cout << result.output;
  if (!result.error.empty()) std::cerr << result.error;
  return result.exit_code;
}
