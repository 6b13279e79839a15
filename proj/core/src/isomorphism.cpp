#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qrlab/enumerate.hpp"

namespace qrlab {

namespace {

// Calls f(perm) for each bijection fixing zero and one; f returns false to stop.
template <class F>
void for_each_fixing_perm(const Structure& s, F&& f) {
  const std::size_t n = s.size;
  std::vector<Element> movable;
  for (Element x = 0; x < n; ++x) {
    if (x != s.zero && x != s.one) movable.push_back(x);
  }
  std::vector<Element> images = movable;
  do {
    std::vector<Element> perm(n);
    perm[s.zero] = s.zero;
    perm[s.one] = s.one;
    for (std::size_t i = 0; i < movable.size(); ++i) perm[movable[i]] = images[i];
    if (!f(perm)) return;
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace

IsoResult are_isomorphic(const AnyAlgebra& a, const AnyAlgebra& b) {
  if (kind_of(a) != kind_of(b)) throw std::invalid_argument("algebras of different kinds");
  const Structure sa = structure_of(a);
  const Structure sb = structure_of(b);
  IsoResult out;
  if (sa.size != sb.size || sa.zero != sb.zero || sa.one != sb.one) return out;
  const std::vector<int> target = encode(sb);
  for_each_fixing_perm(sa, [&](const std::vector<Element>& perm) {
    if (encode(permuted(sa, perm)) == target) {
      out = IsoResult{true, perm};
      return false;
    }
    return true;
  });
  return out;
}

std::vector<int> canonical_key(const AnyAlgebra& a) {
  const Structure s = structure_of(a);
  std::vector<int> best;
  for_each_fixing_perm(s, [&](const std::vector<Element>& perm) {
    std::vector<int> key = encode(permuted(s, perm));
    if (best.empty() || key < best) best = std::move(key);
    return true;
  });
  return best;
}

std::size_t automorphism_count(const AnyAlgebra& a) {
  const Structure s = structure_of(a);
  const std::vector<int> self = encode(s);
  std::size_t count = 0;
  for_each_fixing_perm(s, [&](const std::vector<Element>& perm) {
    if (encode(permuted(s, perm)) == self) ++count;
    return true;
  });
  return count;
}

std::vector<int> table_key(const AnyAlgebra& a) { return encode(structure_of(a)); }

}  // namespace qrlab
