#pragma once

#include <stdexcept>

namespace latca {

// Thrown when an exhaustive check would exceed its configured brute-force
// cap. Distinct from a mathematical verdict: the caller asked a question the
// library refuses to answer at this size, nothing more.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace latca
