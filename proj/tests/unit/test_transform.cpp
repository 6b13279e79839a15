#include <doctest.h>

#include <string_view>

#include "oracles.hpp"
#include "qrlab/catalog.hpp"
#include "qrlab/transform.hpp"

using namespace qrlab;
using namespace qrlab::testing;

namespace {

LatticeEffectAlgebra lattice_of(const EffectAlgebra& e) {
  return std::get<LatticeEffectAlgebra>(detect_lattice_effect(e));
}

}  // namespace

TEST_CASE("E recovers the effect algebra from its C-image") {
  for (const auto& e : {chain_effect(3), powerset_effect(2), chain_effect(4), powerset_effect(3)}) {
    const LatticeEffectAlgebra back = effect_of_cqrl(cqrl_of_effect(lattice_of(e)));
    CHECK(back.base.plus == e.plus);
    CHECK(back.base.comp == e.comp);
  }
}

TEST_CASE("C-images of lattice effect algebras up to size 5 are divisible CQRLs") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& e : models_of<EffectAlgebra>(ModelKind::LatticeEffect, n)) {
      const CommQResLattice c = cqrl_of_effect(lattice_of(e));
      CHECK(check_cqrl_axioms(c).passed());
      CHECK(check_cqrl_divisibility(c).passed());
      CHECK(roundtrip_effect(lattice_of(e)).passed());
    }
  }
}

TEST_CASE("E-images of enumerated CQRLs are effect algebras with the same order") {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::size_t divisible = 0;
    for (const auto& c : models_of<CommQResLattice>(ModelKind::Cqrl, n)) {
      const LatticeEffectAlgebra e = effect_of_cqrl(c);
      CHECK(check_effect_axioms(e.base).passed());
      auto order = derive_induced_order(e.base);
      REQUIRE(std::holds_alternative<BoundedPoset>(order));
      CHECK(same_order(std::get<BoundedPoset>(order), c.lattice.order));
      divisible += check_cqrl_divisibility(c).passed() ? 1 : 0;
    }
    CHECK(divisible == models_of<CommQResLattice>(ModelKind::CqrlDivisible, n).size());
  }
}

TEST_CASE("Q-images of effect algebras collapse both implications") {
  const auto mv3 = as_pseudoeffect(lattice_of(chain_effect(3)));
  const QResLattice q = qrl_of_pseudoeffect(mv3);
  const CommQResLattice c = cqrl_of_effect(lattice_of(chain_effect(3)));
  CHECK(q.arrow == c.arrow);
  CHECK(q.leadsto == c.arrow);
  CHECK(q.odot == c.odot);

  const QResLattice d = qrl_of_pseudoeffect(as_pseudoeffect(lattice_of(powerset_effect(2))));
  CHECK(d.arrow.at(1, 2) == 2);

  const QResLattice two = qrl_of_pseudoeffect(as_pseudoeffect(lattice_of(chain_effect(2))));
  for (Element x = 0; x < 2; ++x) {
    for (Element y = 0; y < 2; ++y) {
      CHECK(two.arrow.at(x, y) == ((x == 0 || y == 1) ? 1u : 0u));
      CHECK(two.leadsto.at(x, y) == two.arrow.at(x, y));
    }
  }
}

TEST_CASE("P recovers the pseudoeffect algebra from its Q-image") {
  for (const char* name : {"mv3-pseudo", "diamond-pseudo", "mv4-pseudo", "hsum-mv3-pseudo"}) {
    const auto p = std::get<PseudoeffectAlgebra>(find_catalog_entry(name)->algebra);
    const auto gp = std::get<GoodLatticePseudoeffectAlgebra>(detect_good_lattice_pseudo(p));
    const GoodLatticePseudoeffectAlgebra back = pseudoeffect_of_qrl(qrl_of_pseudoeffect(gp));
    CHECK(back.base.plus == p.plus);
    CHECK(back.base.bar == p.bar);
    CHECK(back.base.tilde == p.tilde);
    CHECK(roundtrip_pseudoeffect(gp).passed());
  }
}

TEST_CASE("P of a lifted CQRL has equal complements") {
  for (const auto& entry : catalog()) {
    const auto* c = std::get_if<CommQResLattice>(&entry.algebra);
    if (!c) continue;
    const auto p = pseudoeffect_of_qrl(lift_to_qrl(*c));
    CHECK(p.base.bar == p.base.tilde);
    CHECK(check_pseudoeffect_axioms(p.base).passed());
  }
}

TEST_CASE("non-good input is rejected with the goodness report") {
  auto gp = as_pseudoeffect(lattice_of(powerset_effect(2)));
  gp.base.bar.set(1, 1);
  try {
    (void)qrl_of_pseudoeffect(gp);
    FAIL("expected PreconditionFailure");
  } catch (const PreconditionFailure& f) {
    CHECK_FALSE(f.report.passed());
    CHECK(f.report.failed("GOOD-DEF"));
  }
  CHECK_FALSE(roundtrip_pseudoeffect(gp).passed());
}

TEST_CASE("E of a CQRL with a missing product raises a construction defect") {
  CommQResLattice c = cqrl_of_effect(lattice_of(chain_effect(3)));
  c.odot.set(1, 1, std::nullopt);
  CHECK_THROWS_AS(effect_of_cqrl(c), ConstructionDefect);
}

TEST_CASE("round-trip verdicts on mutated inputs match a direct comparison") {
  const LatticeEffectAlgebra le = lattice_of(chain_effect(4));
  std::size_t failures = 0;
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      for (std::size_t v = 0; v <= 4; ++v) {
        LatticeEffectAlgebra m = le;
        m.base.plus.set(x, y, v == 4 ? std::nullopt : std::optional<Element>(v));
        if (m.base.plus == le.base.plus) continue;
        bool differs = false;
        try {
          const LatticeEffectAlgebra back = effect_of_cqrl(cqrl_of_effect(m));
          differs = !(back.base.plus == m.base.plus && back.base.comp == m.base.comp);
        } catch (const ConstructionDefect&) {
          differs = true;
        }
        const CheckReport r = roundtrip_effect(m);
        CHECK(r.failed("RT-E") == differs);
        if (differs) ++failures;
      }
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("probes on C-images are identical and labelled as conjectures") {
  CHECK(std::string_view(kProbeLabel).find("conjecture") != std::string_view::npos);
  for (const auto& e : {chain_effect(3), powerset_effect(2)}) {
    CHECK(probe_cqrl_image(cqrl_of_effect(lattice_of(e))).identical);
    CHECK(probe_qrl_image(qrl_of_pseudoeffect(as_pseudoeffect(lattice_of(e)))).identical);
  }
}

TEST_CASE("probe verdicts agree with a direct table comparison") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& c : models_of<CommQResLattice>(ModelKind::Cqrl, n)) {
      const ProbeReport r = probe_cqrl_image(c);
      const CommQResLattice again = cqrl_of_effect(effect_of_cqrl(c));
      CHECK(r.identical == (again.odot == c.odot && again.arrow == c.arrow));
    }
  }
}
