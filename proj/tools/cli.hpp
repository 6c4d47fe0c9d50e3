#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monoidlab::cli {

  // Exit codes.
  inline constexpr int kOk        = 0;
  inline constexpr int kViolation = 1;  // a requested check failed; outputs still written
  inline constexpr int kBadInput  = 2;  // unreadable input, bad arguments, cap exceeded

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace monoidlab::cli
