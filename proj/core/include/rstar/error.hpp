#pragma once

#include <stdexcept>

namespace rstar {

// Raised when an enumeration or search exceeds a configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computation contradicts a fact that must hold for finite
// rings (e.g. the primary components of I failing to intersect to I).
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rstar
