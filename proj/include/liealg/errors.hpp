#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liealg {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// LU elimination met a pivot below the singularity threshold.
class SingularSystem : public std::runtime_error {
 public:
  SingularSystem(std::size_t pivot_index, double rcond)
      : std::runtime_error("singular system: pivot " + std::to_string(pivot_index) +
                           " below threshold (rcond " + std::to_string(rcond) + ")"),
        pivot_index_(pivot_index),
        rcond_(rcond) {}

  std::size_t pivot_index() const noexcept { return pivot_index_; }
  double rcond() const noexcept { return rcond_; }

 private:
  std::size_t pivot_index_;
  double rcond_;
};

/// Problem size exceeds what floating-point verification can certify.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateShooting : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liealg
