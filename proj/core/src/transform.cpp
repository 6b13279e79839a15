#include "qrlab/transform.hpp"

#include <utility>

namespace qrlab {

CommQResLattice cqrl_of_effect(const LatticeEffectAlgebra& le) {
  const EffectAlgebra& e = le.base;
  const LatticeTables& lat = le.lattice;
  const std::size_t n = e.size();
  const auto& comp = e.comp;
  PartialBinaryTable odot(n);
  TotalBinaryTable arrow(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (lat.order.leq(comp(x), y)) {
        const auto s = e.plus.at(comp(x), comp(y));
        if (!s) throw ConstructionDefect("x' + y' undefined although x' <= y", x, y);
        odot.set(x, y, comp(*s));
      }
      const auto a = e.plus.at(lat.meet.at(x, y), comp(x));
      if (!a) throw ConstructionDefect("(x ^ y) + x' undefined", x, y);
      arrow.set(x, y, *a);
    }
  }
  return CommQResLattice{e.carrier, lat, std::move(odot), std::move(arrow), e.zero, e.one};
}

LatticeEffectAlgebra effect_of_cqrl(const CommQResLattice& c) {
  const std::size_t n = c.size();
  PartialBinaryTable plus(n);
  UnaryTable comp(n);
  for (Element x = 0; x < n; ++x) {
    comp.set(x, c.prime(x));
    for (Element y = 0; y < n; ++y) {
      if (!c.leq(x, c.prime(y))) continue;
      const auto p = c.odot.at(c.prime(x), c.prime(y));
      if (!p) throw ConstructionDefect("x' odot y' undefined although x <= y'", x, y);
      plus.set(x, y, c.prime(*p));
    }
  }
  return LatticeEffectAlgebra{EffectAlgebra{c.carrier, std::move(plus), std::move(comp), c.zero, c.one},
                              c.lattice};
}

QResLattice qrl_of_pseudoeffect(const GoodLatticePseudoeffectAlgebra& gp) {
  const PseudoeffectAlgebra& p = gp.base;
  const LatticeTables& lat = gp.lattice;
  CheckReport good = check_goodness(p, lat.order);
  if (!good.passed()) throw PreconditionFailure("input is not a good pseudoeffect algebra", good);

  const std::size_t n = p.size();
  PartialBinaryTable odot(n);
  TotalBinaryTable arrow(n);
  TotalBinaryTable leadsto(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (lat.order.leq(p.tilde(x), y)) {
        const auto s = p.plus.at(p.bar(x), p.bar(y));
        if (!s) throw ConstructionDefect("bar x + bar y undefined although tilde x <= y", x, y);
        odot.set(x, y, p.tilde(*s));
      }
      const Element m = lat.meet.at(x, y);
      const auto a = p.plus.at(p.bar(x), m);
      if (!a) throw ConstructionDefect("bar x + (x ^ y) undefined", x, y);
      arrow.set(x, y, *a);
      const auto l = p.plus.at(m, p.tilde(x));
      if (!l) throw ConstructionDefect("(x ^ y) + tilde x undefined", x, y);
      leadsto.set(x, y, *l);
    }
  }
  return QResLattice{p.carrier,      lat,    std::move(odot), std::move(arrow),
                     std::move(leadsto), p.zero, p.one};
}

GoodLatticePseudoeffectAlgebra pseudoeffect_of_qrl(const QResLattice& q) {
  const std::size_t n = q.size();
  PartialBinaryTable plus(n);
  UnaryTable bar(n);
  UnaryTable tilde(n);
  for (Element x = 0; x < n; ++x) {
    bar.set(x, q.bar(x));
    tilde.set(x, q.tilde(x));
    for (Element y = 0; y < n; ++y) {
      if (!q.leq(x, q.bar(y))) continue;
      const auto prod = q.odot.at(q.bar(x), q.bar(y));
      if (!prod) throw ConstructionDefect("bar x odot bar y undefined although x <= bar y", x, y);
      plus.set(x, y, q.tilde(*prod));
    }
  }
  return GoodLatticePseudoeffectAlgebra{
      PseudoeffectAlgebra{q.carrier, std::move(plus), std::move(bar), std::move(tilde), q.zero,
                          q.one},
      q.lattice};
}

std::optional<std::pair<Element, Element>> first_difference(const PartialBinaryTable& a,
                                                            const PartialBinaryTable& b) {
  if (a.size() != b.size()) return std::pair<Element, Element>{0, 0};
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.at(x, y) != b.at(x, y)) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Element, Element>> first_difference(const TotalBinaryTable& a,
                                                            const TotalBinaryTable& b) {
  if (a.size() != b.size()) return std::pair<Element, Element>{0, 0};
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.at(x, y) != b.at(x, y)) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

namespace {

void compare_unary(const UnaryTable& a, const UnaryTable& b, const char* name, LawRecorder& rec) {
  for (Element x = 0; x < a.size(); ++x) {
    if (a(x) != b(x)) {
      rec.violation({x}, std::string(name) + " differs");
      return;
    }
  }
}

}  // namespace

CheckReport roundtrip_effect(const LatticeEffectAlgebra& le) {
  LawRecorder rec("RT-E", "E(C(E)) = E table by table", CheckOptions{});
  try {
    const LatticeEffectAlgebra back = effect_of_cqrl(cqrl_of_effect(le));
    if (auto d = first_difference(le.base.plus, back.base.plus)) {
      rec.violation({d->first, d->second}, "plus differs");
    }
    compare_unary(le.base.comp, back.base.comp, "comp", rec);
  } catch (const ConstructionDefect& defect) {
    rec.violation({defect.x, defect.y}, defect.what());
  }
  CheckReport report;
  report.add(std::move(rec).finish());
  return report;
}

CheckReport roundtrip_pseudoeffect(const GoodLatticePseudoeffectAlgebra& gp) {
  LawRecorder rec("RT-P", "P(Q(P)) = P table by table", CheckOptions{});
  try {
    const GoodLatticePseudoeffectAlgebra back = pseudoeffect_of_qrl(qrl_of_pseudoeffect(gp));
    if (auto d = first_difference(gp.base.plus, back.base.plus)) {
      rec.violation({d->first, d->second}, "plus differs");
    }
    compare_unary(gp.base.bar, back.base.bar, "bar", rec);
    compare_unary(gp.base.tilde, back.base.tilde, "tilde", rec);
  } catch (const ConstructionDefect& defect) {
    rec.violation({defect.x, defect.y}, defect.what());
  } catch (const PreconditionFailure& failure) {
    rec.violation({gp.base.zero}, failure.what());
  }
  CheckReport report;
  report.add(std::move(rec).finish());
  return report;
}

ProbeReport probe_cqrl_image(const CommQResLattice& c) {
  ProbeReport out;
  try {
    const CommQResLattice again = cqrl_of_effect(effect_of_cqrl(c));
    if (auto d = first_difference(c.odot, again.odot)) {
      out = ProbeReport{false, "odot", d, {}};
    } else if (auto d2 = first_difference(c.arrow, again.arrow)) {
      out = ProbeReport{false, "arrow", d2, {}};
    }
  } catch (const ConstructionDefect& defect) {
    out = ProbeReport{false, {}, std::pair{defect.x, defect.y}, defect.what()};
  }
  return out;
}

ProbeReport probe_qrl_image(const QResLattice& q) {
  ProbeReport out;
  try {
    const QResLattice again = qrl_of_pseudoeffect(pseudoeffect_of_qrl(q));
    if (auto d = first_difference(q.odot, again.odot)) {
      out = ProbeReport{false, "odot", d, {}};
    } else if (auto d2 = first_difference(q.arrow, again.arrow)) {
      out = ProbeReport{false, "arrow", d2, {}};
    } else if (auto d3 = first_difference(q.leadsto, again.leadsto)) {
      out = ProbeReport{false, "leadsto", d3, {}};
    }
  } catch (const ConstructionDefect& defect) {
    out = ProbeReport{false, {}, std::pair{defect.x, defect.y}, defect.what()};
  } catch (const PreconditionFailure& failure) {
    out = ProbeReport{false, {}, std::nullopt, failure.what()};
  }
  return out;
}

}  // namespace qrlab
