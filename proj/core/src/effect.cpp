#include "qrlab/effect.hpp"

#include <utility>

#include "shape.hpp"

namespace qrlab {

namespace {

void require_shapes(const EffectAlgebra& e) {
  const std::size_t n = e.carrier.size();
  detail::require_size(n, e.plus.size(), "plus table");
  detail::require_size(n, e.comp.size(), "comp map");
  detail::require_element(n, e.zero, "zero");
  detail::require_element(n, e.one, "one");
}

}  // namespace

CheckReport check_effect_axioms(const EffectAlgebra& e, const CheckOptions& options) {
  require_shapes(e);
  const std::size_t n = e.size();
  const auto& plus = e.plus;
  CheckReport report;

  LawRecorder e1("E1", "x+y defined iff y+x defined, and x+y = y+x", options);
  scan_commutativity(plus, e1);
  report.add(std::move(e1).finish());

  LawRecorder e2("E2", "(x+y)+z defined iff x+(y+z) defined, and then equal", options);
  scan_associativity(plus, e2);
  report.add(std::move(e2).finish());

  LawRecorder e3("E3", "x' is the unique u with x+u = 1", options);
  for (Element x = 0; x < n && !e3.done(); ++x) {
    std::optional<Element> first;
    std::optional<Element> second;
    for (Element u = 0; u < n; ++u) {
      if (plus.at(x, u) == e.one) {
        if (!first) first = u;
        else if (!second) second = u;
      }
    }
    if (!first) {
      e3.violation({x}, "no u with x+u = 1");
    } else if (second) {
      e3.violation({x, *second}, "u with x+u = 1 is not unique");
    } else if (e.comp(x) != *first) {
      e3.violation({x, *first}, "stored complement differs from the unique u");
    }
  }
  report.add(std::move(e3).finish());

  LawRecorder e4("E4", "1+x defined implies x = 0", options);
  for (Element x = 0; x < n && !e4.done(); ++x) {
    if (x != e.zero && plus.defined(e.one, x)) e4.violation({x});
  }
  report.add(std::move(e4).finish());
  return report;
}

std::variant<BoundedPoset, CheckReport> derive_induced_order(const EffectAlgebra& e) {
  require_shapes(e);
  const std::size_t n = e.size();
  Relation rel(n);
  for (Element x = 0; x < n; ++x) {
    for (Element z = 0; z < n; ++z) {
      if (auto y = e.plus.at(x, z)) rel.set(x, *y, true);
    }
  }
  return validate_poset(rel, e.zero, e.one);
}

std::variant<LatticeEffectAlgebra, NotALattice> detect_lattice_effect(const EffectAlgebra& e) {
  auto order = derive_induced_order(e);
  if (std::holds_alternative<CheckReport>(order)) return NotALattice{e.zero, e.zero, "order"};
  auto lattice = lattice_from_poset(std::get<BoundedPoset>(order));
  if (auto* bad = std::get_if<NotALattice>(&lattice)) return *bad;
  return LatticeEffectAlgebra{e, std::get<LatticeTables>(std::move(lattice))};
}

CheckReport check_effect_lemma_properties(const EffectAlgebra& e, const BoundedPoset& order,
                                          const CheckOptions& options) {
  require_shapes(e);
  detail::require_size(e.size(), order.size(), "order");
  const std::size_t n = e.size();
  const auto& plus = e.plus;
  const auto& c = e.comp;
  auto le = [&](Element x, Element y) { return order.leq(x, y); };
  CheckReport report;

  LawRecorder i("LEM-i", "a'' = a", options);
  for (Element a = 0; a < n; ++a) {
    if (c(c(a)) != a) i.violation({a});
  }
  report.add(std::move(i).finish());

  LawRecorder ii("LEM-ii", "a <= b implies b' <= a'", options);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (le(a, b) && !le(c(b), c(a))) ii.violation({a, b});
    }
  }
  report.add(std::move(ii).finish());

  LawRecorder iii("LEM-iii", "a+b defined iff a <= b'", options);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (plus.defined(a, b) != le(a, c(b))) iii.violation({a, b});
    }
  }
  report.add(std::move(iii).finish());

  LawRecorder iv("LEM-iv", "a <= b and b+c defined imply a+c defined and a+c <= b+c", options);
  for (Element a = 0; a < n && !iv.done(); ++a) {
    for (Element b = 0; b < n && !iv.done(); ++b) {
      if (!le(a, b)) continue;
      for (Element d = 0; d < n; ++d) {
        auto bd = plus.at(b, d);
        if (!bd) continue;
        auto ad = plus.at(a, d);
        if (!ad) iv.violation({a, b, d}, "a+c undefined");
        else if (!le(*ad, *bd)) iv.violation({a, b, d}, "a+c not <= b+c");
      }
    }
  }
  report.add(std::move(iv).finish());

  LawRecorder v("LEM-v", "a <= b implies a+(a+b')' = b", options);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      auto inner = plus.at(a, c(b));
      auto outer = inner ? plus.at(a, c(*inner)) : std::nullopt;
      if (outer != b) v.violation({a, b}, outer ? "value differs from b" : "a term is undefined");
    }
  }
  report.add(std::move(v).finish());

  LawRecorder vi("LEM-vi", "a+0 = 0+a = a", options);
  for (Element a = 0; a < n; ++a) {
    if (plus.at(a, e.zero) != a || plus.at(e.zero, a) != a) vi.violation({a});
  }
  report.add(std::move(vi).finish());

  LawRecorder vii("LEM-vii", "0' = 1 and 1' = 0", options);
  if (c(e.zero) != e.one) vii.violation({e.zero}, "0' is not 1");
  if (c(e.one) != e.zero) vii.violation({e.one}, "1' is not 0");
  report.add(std::move(vii).finish());
  return report;
}

CheckReport check_effect_lemma_properties(const LatticeEffectAlgebra& le,
                                          const CheckOptions& options) {
  return check_effect_lemma_properties(le.base, le.lattice.order, options);
}

}  // namespace qrlab
