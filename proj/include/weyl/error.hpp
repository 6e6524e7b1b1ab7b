#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weyl {

class WeylError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public WeylError {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : WeylError("dimension mismatch: expected n=" + std::to_string(expected) +
                  ", got n=" + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

// Raised when an internal postcondition fails. Never expected in practice.
class InvariantViolation : public WeylError {
 public:
  using WeylError::WeylError;
};

}  // namespace weyl
