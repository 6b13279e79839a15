#include "qrlab/pseudoeffect.hpp"

#include <utility>

#include "shape.hpp"

namespace qrlab {

namespace {

void require_shapes(const PseudoeffectAlgebra& p) {
  const std::size_t n = p.carrier.size();
  detail::require_size(n, p.plus.size(), "plus table");
  detail::require_size(n, p.bar.size(), "bar map");
  detail::require_size(n, p.tilde.size(), "tilde map");
  detail::require_element(n, p.zero, "zero");
  detail::require_element(n, p.one, "one");
}

Relation witness_relation(const PseudoeffectAlgebra& p, bool left) {
  const std::size_t n = p.size();
  Relation rel(n);
  for (Element x = 0; x < n; ++x) {
    for (Element z = 0; z < n; ++z) {
      // right witness: x+z = y; left witness: z+x = y
      if (auto y = left ? p.plus.at(z, x) : p.plus.at(x, z)) rel.set(x, *y, true);
    }
  }
  return rel;
}

}  // namespace

CheckReport check_pseudoeffect_axioms(const PseudoeffectAlgebra& p, const CheckOptions& options) {
  require_shapes(p);
  const std::size_t n = p.size();
  const auto& plus = p.plus;
  CheckReport report;

  LawRecorder p1("P1", "x+y defined implies u+x = y+w = x+y for some u, w", options);
  for (Element x = 0; x < n && !p1.done(); ++x) {
    for (Element y = 0; y < n && !p1.done(); ++y) {
      auto s = plus.at(x, y);
      if (!s) continue;
      bool left = false;
      bool right = false;
      for (Element t = 0; t < n; ++t) {
        left = left || plus.at(t, x) == s;
        right = right || plus.at(y, t) == s;
      }
      if (!left) p1.violation({x, y}, "no u with u+x = x+y");
      if (!right) p1.violation({x, y}, "no w with y+w = x+y");
    }
  }
  report.add(std::move(p1).finish());

  LawRecorder p2("P2", "(x+y)+z defined iff x+(y+z) defined, and then equal", options);
  scan_associativity(plus, p2);
  report.add(std::move(p2).finish());

  LawRecorder p3("P3", "bar(x) unique with u+x = 1; tilde(x) unique with x+w = 1", options);
  for (Element x = 0; x < n && !p3.done(); ++x) {
    std::size_t lefts = 0;
    std::size_t rights = 0;
    Element left = 0;
    Element right = 0;
    for (Element t = 0; t < n; ++t) {
      if (plus.at(t, x) == p.one && lefts++ == 0) left = t;
      if (plus.at(x, t) == p.one && rights++ == 0) right = t;
    }
    if (lefts == 0) p3.violation({x}, "no u with u+x = 1");
    else if (lefts > 1) p3.violation({x}, "u with u+x = 1 is not unique");
    else if (p.bar(x) != left) p3.violation({x, left}, "stored bar differs from the unique u");
    if (rights == 0) p3.violation({x}, "no w with x+w = 1");
    else if (rights > 1) p3.violation({x}, "w with x+w = 1 is not unique");
    else if (p.tilde(x) != right) p3.violation({x, right}, "stored tilde differs from the unique w");
  }
  report.add(std::move(p3).finish());

  LawRecorder p4("P4", "1+x or x+1 defined implies x = 0", options);
  for (Element x = 0; x < n && !p4.done(); ++x) {
    if (x != p.zero && (plus.defined(p.one, x) || plus.defined(x, p.one))) p4.violation({x});
  }
  report.add(std::move(p4).finish());
  return report;
}

CheckReport check_goodness(const PseudoeffectAlgebra& p, const BoundedPoset& order,
                           const CheckOptions& options) {
  require_shapes(p);
  detail::require_size(p.size(), order.size(), "order");
  const std::size_t n = p.size();
  LawRecorder value("GOOD", "tilde(bar x + bar y) = bar(tilde x + tilde y) when tilde x <= y",
                    options);
  LawRecorder defined("GOOD-DEF", "both sums of the goodness identity are defined", options);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!order.leq(p.tilde(x), y)) continue;
      auto lhs = p.plus.at(p.bar(x), p.bar(y));
      auto rhs = p.plus.at(p.tilde(x), p.tilde(y));
      if (!lhs || !rhs) {
        defined.violation({x, y}, !lhs ? "bar x + bar y undefined" : "tilde x + tilde y undefined");
      } else if (p.tilde(*lhs) != p.bar(*rhs)) {
        value.violation({x, y});
      }
    }
  }
  CheckReport report;
  report.add(std::move(value).finish());
  report.add(std::move(defined).finish());
  return report;
}

std::variant<BoundedPoset, CheckReport> derive_induced_order_pseudo(const PseudoeffectAlgebra& p) {
  require_shapes(p);
  const Relation right = witness_relation(p, false);
  const Relation left = witness_relation(p, true);
  if (right != left) {
    LawRecorder ix("PLEM-ix", "x+d = y for some d iff e+x = y for some e", CheckOptions{});
    for (Element x = 0; x < p.size(); ++x) {
      for (Element y = 0; y < p.size(); ++y) {
        if (right.holds(x, y) != left.holds(x, y)) {
          ix.violation({x, y}, right.holds(x, y) ? "right witness only" : "left witness only");
        }
      }
    }
    CheckReport report;
    report.add(std::move(ix).finish());
    return report;
  }
  return validate_poset(right, p.zero, p.one);
}

std::variant<GoodLatticePseudoeffectAlgebra, CheckReport> detect_good_lattice_pseudo(
    const PseudoeffectAlgebra& p) {
  auto order = derive_induced_order_pseudo(p);
  if (auto* bad = std::get_if<CheckReport>(&order)) return std::move(*bad);
  auto lattice = lattice_from_poset(std::get<BoundedPoset>(order));
  if (auto* bad = std::get_if<NotALattice>(&lattice)) {
    LawRecorder rec("LATTICE", "induced order is a lattice", CheckOptions{});
    rec.violation({bad->x, bad->y}, "no " + bad->missing);
    CheckReport report;
    report.add(std::move(rec).finish());
    return report;
  }
  auto& tables = std::get<LatticeTables>(lattice);
  CheckReport good = check_goodness(p, tables.order);
  if (!good.passed()) return good;
  return GoodLatticePseudoeffectAlgebra{p, std::move(tables)};
}

CheckReport check_pseudo_lemma_properties(const PseudoeffectAlgebra& p, const BoundedPoset& order,
                                          const CheckOptions& options) {
  require_shapes(p);
  detail::require_size(p.size(), order.size(), "order");
  const std::size_t n = p.size();
  const auto& plus = p.plus;
  const auto& bar = p.bar;
  const auto& tilde = p.tilde;
  auto le = [&](Element x, Element y) { return order.leq(x, y); };
  CheckReport report;

  LawRecorder i("PLEM-i", "bar(tilde a) = tilde(bar a) = a", options);
  for (Element a = 0; a < n; ++a) {
    if (bar(tilde(a)) != a) i.violation({a}, "bar(tilde a) != a");
    if (tilde(bar(a)) != a) i.violation({a}, "tilde(bar a) != a");
  }
  report.add(std::move(i).finish());

  LawRecorder ii("PLEM-ii", "a <= b iff bar b <= bar a iff tilde b <= tilde a", options);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const bool base = le(a, b);
      if (base != le(bar(b), bar(a))) ii.violation({a, b}, "bar side disagrees");
      if (base != le(tilde(b), tilde(a))) ii.violation({a, b}, "tilde side disagrees");
    }
  }
  report.add(std::move(ii).finish());

  LawRecorder iii("PLEM-iii", "a+b defined iff a <= bar b", options);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (plus.defined(a, b) != le(a, bar(b))) iii.violation({a, b});
    }
  }
  report.add(std::move(iii).finish());

  LawRecorder iv("PLEM-iv", "a <= b and b+c defined imply a+c defined and a+c <= b+c", options);
  LawRecorder v("PLEM-v", "a <= b and c+b defined imply c+a defined and c+a <= c+b", options);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (auto bc = plus.at(b, c)) {
          auto ac = plus.at(a, c);
          if (!ac) iv.violation({a, b, c}, "a+c undefined");
          else if (!le(*ac, *bc)) iv.violation({a, b, c}, "a+c not <= b+c");
        }
        if (auto cb = plus.at(c, b)) {
          auto ca = plus.at(c, a);
          if (!ca) v.violation({a, b, c}, "c+a undefined");
          else if (!le(*ca, *cb)) v.violation({a, b, c}, "c+a not <= c+b");
        }
      }
    }
  }
  report.add(std::move(iv).finish());
  report.add(std::move(v).finish());

  LawRecorder vi("PLEM-vi", "a <= b implies a + tilde(bar b + a) = bar(a + tilde b) + a = b",
                 options);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      auto s = plus.at(bar(b), a);
      auto right = s ? plus.at(a, tilde(*s)) : std::nullopt;
      if (right != b) vi.violation({a, b}, "a + tilde(bar b + a) != b");
      auto t = plus.at(a, tilde(b));
      auto left = t ? plus.at(bar(*t), a) : std::nullopt;
      if (left != b) vi.violation({a, b}, "bar(a + tilde b) + a != b");
    }
  }
  report.add(std::move(vi).finish());

  LawRecorder vii("PLEM-vii", "a+0 = 0+a = a", options);
  for (Element a = 0; a < n; ++a) {
    if (plus.at(a, p.zero) != a || plus.at(p.zero, a) != a) vii.violation({a});
  }
  report.add(std::move(vii).finish());

  LawRecorder viii("PLEM-viii", "bar 0 = tilde 0 = 1 and bar 1 = tilde 1 = 0", options);
  if (bar(p.zero) != p.one || tilde(p.zero) != p.one) viii.violation({p.zero});
  if (bar(p.one) != p.zero || tilde(p.one) != p.zero) viii.violation({p.one});
  report.add(std::move(viii).finish());

  LawRecorder ix("PLEM-ix", "a <= b iff a+d = b for some d iff e+a = b for some e", options);
  const Relation right = witness_relation(p, false);
  const Relation left = witness_relation(p, true);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (le(a, b) != right.holds(a, b)) ix.violation({a, b}, "right witness disagrees");
      if (le(a, b) != left.holds(a, b)) ix.violation({a, b}, "left witness disagrees");
    }
  }
  report.add(std::move(ix).finish());
  return report;
}

CheckReport check_pseudo_lemma_properties(const GoodLatticePseudoeffectAlgebra& gp,
                                          const CheckOptions& options) {
  return check_pseudo_lemma_properties(gp.base, gp.lattice.order, options);
}

PseudoeffectAlgebra as_pseudoeffect(const EffectAlgebra& e) {
  return PseudoeffectAlgebra{e.carrier, e.plus, e.comp, e.comp, e.zero, e.one};
}

GoodLatticePseudoeffectAlgebra as_pseudoeffect(const LatticeEffectAlgebra& le) {
  return GoodLatticePseudoeffectAlgebra{as_pseudoeffect(le.base), le.lattice};
}

}  // namespace qrlab
