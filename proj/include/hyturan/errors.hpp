#pragma once

#include <stdexcept>
#include <string>

namespace hyturan {

/// Malformed input: bad edges, mismatched sizes, parameter violations.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Instance too large for an exact (exponential) routine.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex label outside 0..n-1.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace hyturan
