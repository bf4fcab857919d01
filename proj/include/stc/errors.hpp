#pragma once

#include <stdexcept>

namespace stc {

// Shape disagreement between operands.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Unreadable or malformed input files, incompatible checkpoints, label
// catalog violations.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values in a numeric path, or a failed numeric verification.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stc
