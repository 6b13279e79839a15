// Reference generate-and-test. No propagation: every assignment of every table
// is produced and handed to the axiom checkers. To keep n = 3 tractable, a law
// is applied as soon as all tables it reads are fixed.

#include <map>

#include "qrlab/enumerate.hpp"

namespace qrlab {

namespace {

constexpr std::size_t kOracleMax = 3;

// Odometer over `cells` digits in [0, base); f(digits) returns nothing.
template <class F>
void for_each_assignment(std::size_t cells, std::size_t base, F&& f) {
  std::vector<std::size_t> d(cells, 0);
  while (true) {
    f(d);
    std::size_t i = 0;
    while (i < cells && ++d[i] == base) d[i++] = 0;
    if (i == cells) return;
  }
}

// Digit 0 is undefined, digit v + 1 is Defined(v).
PartialBinaryTable partial_from(const std::vector<std::size_t>& d, std::size_t n) {
  PartialBinaryTable t(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::size_t v = d[x * n + y];
      if (v > 0) t.set(x, y, v - 1);
    }
  }
  return t;
}

std::vector<PartialBinaryTable> all_partial_tables(std::size_t n) {
  std::vector<PartialBinaryTable> out;
  for_each_assignment(n * n, n + 1, [&](const auto& d) { out.push_back(partial_from(d, n)); });
  return out;
}

// The unique u with side(u) == one, or zero if there is none or several. A
// wrong guess is caught by the complement law.
template <class Side>
Element forced_complement(std::size_t n, Element fallback, Side side) {
  std::optional<Element> found;
  for (Element u = 0; u < n; ++u) {
    if (!side(u)) continue;
    if (found) return fallback;
    found = u;
  }
  return found.value_or(fallback);
}

std::vector<LatticeTables> all_lattices(std::size_t n) {
  std::vector<LatticeTables> out;
  for_each_assignment(n * n, 2, [&](const auto& d) {
    Relation rel(n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) rel.set(x, y, d[x * n + y] == 1);
    }
    auto poset = validate_poset(rel, 0, n - 1);
    if (auto* p = std::get_if<BoundedPoset>(&poset)) {
      auto lat = lattice_from_poset(*p);
      if (auto* l = std::get_if<LatticeTables>(&lat)) out.push_back(std::move(*l));
    }
  });
  return out;
}

// All total tables whose column 0 equals col.
std::vector<TotalBinaryTable> tables_with_column0(std::size_t n, const std::vector<Element>& col) {
  std::vector<TotalBinaryTable> out;
  for_each_assignment(n * (n - 1), n, [&](const auto& d) {
    TotalBinaryTable t(n);
    std::size_t k = 0;
    for (Element x = 0; x < n; ++x) {
      t.set(x, 0, col[x]);
      for (Element y = 1; y < n; ++y) t.set(x, y, d[k++]);
    }
    out.push_back(std::move(t));
  });
  return out;
}

TotalBinaryTable column0_only(std::size_t n, const std::vector<Element>& col) {
  TotalBinaryTable t(n);
  for (Element x = 0; x < n; ++x) t.set(x, 0, col[x]);
  return t;
}

std::vector<std::vector<Element>> all_maps(std::size_t n) {
  std::vector<std::vector<Element>> out;
  for_each_assignment(n, n, [&](const auto& d) { out.emplace_back(d.begin(), d.end()); });
  return out;
}

const CheckOptions kFast = CheckOptions::fast();

std::vector<AnyAlgebra> oracle_effect(std::size_t n) {
  std::vector<AnyAlgebra> out;
  const Carrier carrier = Carrier::with_default_labels(n);
  for (PartialBinaryTable& plus : all_partial_tables(n)) {
    UnaryTable comp(n);
    for (Element x = 0; x < n; ++x) {
      comp.set(x, forced_complement(n, 0, [&](Element u) { return plus.at(x, u) == n - 1; }));
    }
    EffectAlgebra e{carrier, std::move(plus), std::move(comp), 0, n - 1};
    if (check_effect_axioms(e, kFast).passed()) out.emplace_back(std::move(e));
  }
  return out;
}

std::vector<AnyAlgebra> oracle_pseudoeffect(std::size_t n) {
  std::vector<AnyAlgebra> out;
  const Carrier carrier = Carrier::with_default_labels(n);
  for (PartialBinaryTable& plus : all_partial_tables(n)) {
    UnaryTable bar(n);
    UnaryTable tilde(n);
    for (Element x = 0; x < n; ++x) {
      bar.set(x, forced_complement(n, 0, [&](Element u) { return plus.at(u, x) == n - 1; }));
      tilde.set(x, forced_complement(n, 0, [&](Element w) { return plus.at(x, w) == n - 1; }));
    }
    PseudoeffectAlgebra p{carrier, std::move(plus), std::move(bar), std::move(tilde), 0, n - 1};
    if (check_pseudoeffect_axioms(p, kFast).passed()) out.emplace_back(std::move(p));
  }
  return out;
}

std::vector<AnyAlgebra> oracle_cqrl(std::size_t n) {
  std::vector<AnyAlgebra> out;
  const Carrier carrier = Carrier::with_default_labels(n);
  const std::vector<PartialBinaryTable> odots = all_partial_tables(n);
  for (const LatticeTables& lat : all_lattices(n)) {
    // C2 reads only the order and arrow(-, 0).
    std::map<std::vector<Element>, std::vector<TotalBinaryTable>> arrows_by_prime;
    for (const auto& col : all_maps(n)) {
      CommQResLattice probe{carrier, lat, PartialBinaryTable(n), column0_only(n, col), 0, n - 1};
      if (!check_c2(probe, kFast).passed()) continue;
      arrows_by_prime.emplace(col, tables_with_column0(n, col));
    }
    for (const auto& [prime, arrows] : arrows_by_prime) {
      for (const PartialBinaryTable& odot : odots) {
        CommQResLattice c{carrier, lat, odot, arrows.front(), 0, n - 1};
        if (!check_c1(c, kFast).passed()) continue;
        for (const TotalBinaryTable& arrow : arrows) {
          c.arrow = arrow;
          if (check_cqrl_axioms(c, kFast).passed()) out.emplace_back(c);
        }
      }
    }
  }
  return out;
}

std::vector<AnyAlgebra> oracle_qrl(std::size_t n) {
  std::vector<AnyAlgebra> out;
  const Carrier carrier = Carrier::with_default_labels(n);
  const std::vector<PartialBinaryTable> odots = all_partial_tables(n);
  const auto maps = all_maps(n);
  for (const LatticeTables& lat : all_lattices(n)) {
    for (const auto& bar : maps) {
      for (const auto& tilde : maps) {
        // Q2 reads only the order and the zero columns.
        QResLattice q{carrier, lat, PartialBinaryTable(n), column0_only(n, bar),
                      column0_only(n, tilde), 0, n - 1};
        if (!check_q2(q, kFast).passed()) continue;
        const auto arrows = tables_with_column0(n, bar);
        const auto leads = tables_with_column0(n, tilde);
        for (const PartialBinaryTable& odot : odots) {
          q.odot = odot;
          q.arrow = arrows.front();
          q.leadsto = leads.front();
          if (!check_q1(q, kFast).passed() || !check_q5(q, kFast).passed()) continue;
          std::vector<const TotalBinaryTable*> good_arrows;
          for (const auto& a : arrows) {
            q.arrow = a;
            if (check_q3(q, kFast).passed()) good_arrows.push_back(&a);
          }
          std::vector<const TotalBinaryTable*> good_leads;
          for (const auto& l : leads) {
            q.leadsto = l;
            if (check_q4(q, kFast).passed()) good_leads.push_back(&l);
          }
          for (const auto* a : good_arrows) {
            for (const auto* l : good_leads) {
              q.arrow = *a;
              q.leadsto = *l;
              if (check_qrl_axioms(q, kFast).passed()) out.emplace_back(q);
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<AnyAlgebra> naive_oracle(ModelKind kind, std::size_t size) {
  if (size < 2 || size > kOracleMax) {
    throw EnumerationError("the naive oracle covers sizes 2.." + std::to_string(kOracleMax));
  }
  std::vector<AnyAlgebra> base;
  switch (base_kind(kind)) {
    case AlgebraKind::Effect: base = oracle_effect(size); break;
    case AlgebraKind::Pseudoeffect: base = oracle_pseudoeffect(size); break;
    case AlgebraKind::Cqrl: base = oracle_cqrl(size); break;
    case AlgebraKind::Qrl: base = oracle_qrl(size); break;
  }
  std::vector<AnyAlgebra> out;
  for (auto& a : base) {
    if (satisfies_refinement(kind, a)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace qrlab
