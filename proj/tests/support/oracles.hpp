#pragma once

// Reference models built from arithmetic rather than from the library's
// tables, so tests can compare the two.

#include <optional>
#include <set>
#include <vector>

#include "qrlab/effect.hpp"
#include "qrlab/enumerate.hpp"
#include "qrlab/pseudoeffect.hpp"
#include "qrlab/quasires.hpp"

namespace qrlab::testing {

// Chain 0 < 1 < ... < n-1 with truncated addition: x + y defined iff
// x + y <= n-1.
inline EffectAlgebra chain_effect(std::size_t n) {
  const std::size_t top = n - 1;
  PartialBinaryTable plus(n);
  UnaryTable comp(n);
  for (Element x = 0; x < n; ++x) {
    comp.set(x, top - x);
    for (Element y = 0; y < n; ++y) {
      if (x + y <= top) plus.set(x, y, x + y);
    }
  }
  return EffectAlgebra{Carrier::with_default_labels(n), plus, comp, 0, top};
}

// Lukasiewicz operations on the same chain.
inline std::optional<Element> chain_odot(std::size_t n, Element x, Element y) {
  const std::size_t top = n - 1;
  if (x + y < top) return std::nullopt;  // x' <= y fails
  return x + y - top;
}
inline Element chain_arrow(std::size_t n, Element x, Element y) {
  const std::size_t top = n - 1;
  return y >= x ? top : top - x + y;
}

// Subsets of a k-set as bitmasks: disjoint union, complement.
inline EffectAlgebra powerset_effect(unsigned k) {
  const std::size_t n = std::size_t{1} << k;
  const Element full = n - 1;
  PartialBinaryTable plus(n);
  UnaryTable comp(n);
  for (Element x = 0; x < n; ++x) {
    comp.set(x, full & ~x);
    for (Element y = 0; y < n; ++y) {
      if ((x & y) == 0) plus.set(x, y, x | y);
    }
  }
  return EffectAlgebra{Carrier::with_default_labels(n), plus, comp, 0, full};
}

inline Element powerset_arrow(std::size_t n, Element x, Element y) { return ((n - 1) & ~x) | y; }
inline std::optional<Element> powerset_odot(std::size_t n, Element x, Element y) {
  if ((x | y) != n - 1) return std::nullopt;
  return x & y;
}

// x <= y iff x + z = y for some z, read straight off the table.
inline bool witness_leq(const PartialBinaryTable& plus, Element x, Element y) {
  for (Element z = 0; z < plus.size(); ++z) {
    if (plus.at(x, z) == y) return true;
  }
  return false;
}

inline std::set<std::vector<int>> key_set(const std::vector<AnyAlgebra>& models) {
  std::set<std::vector<int>> keys;
  for (const auto& m : models) keys.insert(table_key(m));
  return keys;
}

inline bool same_order(const BoundedPoset& a, const BoundedPoset& b) {
  if (a.size() != b.size()) return false;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != b.leq(x, y)) return false;
    }
  }
  return true;
}

template <class T>
std::vector<T> models_of(ModelKind kind, std::size_t size) {
  std::vector<T> out;
  for (auto& m : collect_models({kind, size, false, std::nullopt}).models) {
    out.push_back(std::get<T>(std::move(m)));
  }
  return out;
}

}  // namespace qrlab::testing
