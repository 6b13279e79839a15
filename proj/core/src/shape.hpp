#pragma once

#include <string>

#include "qrlab/element.hpp"

namespace qrlab::detail {

inline void require_size(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw StructuralError(std::string(what) + " has size " + std::to_string(actual) +
                          ", carrier has " + std::to_string(expected));
  }
}

inline void require_element(std::size_t n, Element e, const char* what) {
  if (e >= n) throw StructuralError(std::string(what) + " is not an element of the carrier");
}

}  // namespace qrlab::detail
