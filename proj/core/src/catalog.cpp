#include "qrlab/catalog.hpp"

#include <tuple>

#include "qrlab/transform.hpp"

namespace qrlab {

namespace {

using Sum = std::tuple<Element, Element, Element>;

// Unit laws for zero are filled in; sums lists the remaining defined cells
// with x <= y and is mirrored.
EffectAlgebra effect_from_sums(std::vector<std::string> labels, const std::vector<Sum>& sums,
                               const std::vector<Element>& comp) {
  const std::size_t n = labels.size();
  PartialBinaryTable plus(n);
  for (Element x = 0; x < n; ++x) {
    plus.set(0, x, x);
    plus.set(x, 0, x);
  }
  for (const auto& [x, y, s] : sums) {
    plus.set(x, y, s);
    plus.set(y, x, s);
  }
  return EffectAlgebra{Carrier(std::move(labels)), std::move(plus), UnaryTable(comp, n), 0, n - 1};
}

// Sum given as a function returning nullopt where undefined.
template <class Sum>
EffectAlgebra effect_from_fn(std::vector<std::string> labels, Sum sum, Element one) {
  const std::size_t n = labels.size();
  PartialBinaryTable plus(n);
  UnaryTable comp(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::optional<Element> s = sum(x, y);
      plus.set(x, y, s);
      if (s == one) comp.set(x, y);
    }
  }
  return EffectAlgebra{Carrier(std::move(labels)), std::move(plus), std::move(comp), 0, one};
}

// Left and right complements differ: a+c = b+a = c+b = 1.
PseudoeffectAlgebra noncommutative5() {
  PartialBinaryTable plus(5);
  for (Element x = 0; x < 5; ++x) {
    plus.set(0, x, x);
    plus.set(x, 0, x);
  }
  plus.set(1, 3, 4);
  plus.set(2, 1, 4);
  plus.set(3, 2, 4);
  return PseudoeffectAlgebra{Carrier({"0", "a", "b", "c", "1"}), std::move(plus),
                             UnaryTable({4, 2, 3, 1, 0}, 5), UnaryTable({4, 3, 1, 2, 0}, 5), 0, 4};
}

std::vector<CatalogEntry> build() {
  struct Seed {
    const char* name;
    EffectAlgebra e;
    const char* notes;
  };
  std::vector<Seed> seeds;
  seeds.push_back({"boolean2", effect_from_sums({"0", "1"}, {}, {1, 0}), "two-element Boolean algebra"});
  seeds.push_back({"mv3", effect_from_sums({"0", "a", "1"}, {{1, 1, 2}}, {2, 1, 0}),
                   "3-chain, a+a = 1"});
  seeds.push_back({"mv4", effect_from_sums({"0", "a", "b", "1"}, {{1, 1, 2}, {1, 2, 3}}, {3, 2, 1, 0}),
                   "4-chain, truncated addition in thirds"});
  seeds.push_back({"diamond", effect_from_sums({"0", "a", "b", "1"}, {{1, 2, 3}}, {3, 2, 1, 0}),
                   "Boolean 2x2, a+b = 1"});
  seeds.push_back({"hsum-mv3",
                   effect_from_sums({"0", "a", "b", "1"}, {{1, 1, 3}, {2, 2, 3}}, {3, 1, 2, 0}),
                   "two copies of mv3 glued at 0 and 1"});
  seeds.push_back({"mv5",
                   effect_from_fn({"0", "a", "b", "c", "1"},
                                  [](Element x, Element y) {
                                    return x + y <= 4 ? std::optional<Element>(x + y) : std::nullopt;
                                  },
                                  4),
                   "5-chain, truncated addition in quarters"});
  // Index = bit mask over the atoms a, b, c.
  seeds.push_back({"cube",
                   effect_from_fn({"0", "a", "b", "ab", "c", "ac", "bc", "1"},
                                  [](Element x, Element y) {
                                    return (x & y) == 0 ? std::optional<Element>(x | y) : std::nullopt;
                                  },
                                  7),
                   "Boolean algebra on three atoms"});
  // Index = 2i + j for (i, j) in mv3 x boolean2.
  seeds.push_back({"mv3xb2",
                   effect_from_fn({"0", "p", "a", "ap", "u", "1"},
                                  [](Element x, Element y) -> std::optional<Element> {
                                    const Element i = x / 2 + y / 2;
                                    const Element j = x % 2 + y % 2;
                                    if (i > 2 || j > 1) return std::nullopt;
                                    return 2 * i + j;
                                  },
                                  5),
                   "product of mv3 and the two-element Boolean algebra"});

  std::vector<CatalogEntry> out;
  for (auto& seed : seeds) {
    const std::string name = seed.name;
    auto lattice = detect_lattice_effect(seed.e);
    out.push_back({name, seed.e, seed.notes});
    out.push_back({name + "-pseudo", as_pseudoeffect(seed.e), std::string(seed.notes) + "; bar = tilde = comp"});
    if (const auto* le = std::get_if<LatticeEffectAlgebra>(&lattice)) {
      out.push_back({name + "-cqrl", cqrl_of_effect(*le), "C-image of " + name});
      out.push_back({name + "-qrl", qrl_of_pseudoeffect(as_pseudoeffect(*le)), "Q-image of " + name + "-pseudo"});
    }
  }
  const PseudoeffectAlgebra nc = noncommutative5();
  out.push_back({"noncomm5-pseudo", nc, "smallest non-commutative good lattice pseudoeffect algebra"});
  if (auto gp = detect_good_lattice_pseudo(nc); auto* g = std::get_if<GoodLatticePseudoeffectAlgebra>(&gp)) {
    out.push_back({"noncomm5-qrl", qrl_of_pseudoeffect(*g), "Q-image of noncomm5-pseudo"});
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::optional<CatalogEntry> find_catalog_entry(std::string_view name) {
  for (const auto& entry : catalog()) {
    if (entry.name == name) return entry;
  }
  return std::nullopt;
}

}  // namespace qrlab
