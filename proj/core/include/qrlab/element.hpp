#pragma once

#include <cstddef>
#include <stdexcept>

namespace qrlab {

using Element = std::size_t;

/// Raised when inputs have the wrong shape (table sizes, out-of-range
/// indices, bad labels). Law violations are never reported this way.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qrlab
