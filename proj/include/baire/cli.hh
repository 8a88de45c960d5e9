#pragma once

#include <string>
#include <vector>

namespace baire
{
  struct CliResult
  {
    int status = 0;   ///< 0 ok, 2 usage or input error, 3 invariant violation
    std::string out;
    std::string err;
  };

  /// Runs one command line. `args` excludes the program name. Output is
  /// deterministic for identical inputs and flags.
  CliResult run_cli(const std::vector<std::string>& args);
}
