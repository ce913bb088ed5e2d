#pragma once

#include <string>
#include <vector>

namespace tropjac::cli {

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

/// `args` excludes the program name. Never throws; failures become status 2
/// with an {"error":{"code","message"}} object on `out`.
CliResult run(const std::vector<std::string>& args);

}  // namespace tropjac::cli
