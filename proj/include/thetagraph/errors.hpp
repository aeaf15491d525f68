#pragma once

#include <stdexcept>
#include <string>

namespace thetagraph {

/// Raised when an exhaustive computation is asked for a field larger than
/// its enumeration limit.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, int n, int limit)
      : std::runtime_error(what + ": n = " + std::to_string(n) + " exceeds the limit " + std::to_string(limit)) {}
};

}  // namespace thetagraph
