#include <doctest.h>

#include "oracles.hpp"
#include "qrlab/catalog.hpp"
#include "qrlab/enumerate.hpp"

using namespace qrlab;
using namespace qrlab::testing;

namespace {

std::size_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

AnyAlgebra entry(const char* name) { return find_catalog_entry(name)->algebra; }

// The same structure with elements i and j swapped in every table and label.
EffectAlgebra swapped(const EffectAlgebra& e, Element i, Element j) {
  std::vector<Element> perm(e.size());
  for (Element x = 0; x < e.size(); ++x) perm[x] = x == i ? j : x == j ? i : x;
  Structure s = permuted(structure_of(e), perm);
  return std::get<EffectAlgebra>(from_structure(AlgebraKind::Effect, s, e.carrier));
}

}  // namespace

TEST_CASE("kind tokens round-trip") {
  for (ModelKind k : kAllModelKinds) CHECK(parse_model_kind(model_kind_token(k)) == k);
  CHECK_FALSE(parse_model_kind("lattice").has_value());
}

TEST_CASE("effect algebras of size 2 and 3 are unique") {
  CHECK(collect_models({ModelKind::Effect, 2}).models.size() == 1);
  CHECK(collect_models({ModelKind::Effect, 3}).models.size() == 1);
  CHECK(naive_oracle(ModelKind::Effect, 2).size() == 1);
  CHECK(naive_oracle(ModelKind::Effect, 3).size() == 1);
  const auto mv3 = collect_models({ModelKind::Effect, 3}).models.front();
  CHECK(std::get<EffectAlgebra>(mv3).plus == chain_effect(3).plus);
}

TEST_CASE("pruned search agrees with the naive oracle at size 2") {
  for (ModelKind k : kAllModelKinds) {
    CHECK_MESSAGE(key_set(collect_models({k, 2}).models) == key_set(naive_oracle(k, 2)),
                  model_kind_token(k));
  }
}

TEST_CASE("pruned search agrees with the naive oracle for effect and cqrl at size 3") {
  for (ModelKind k : {ModelKind::Effect, ModelKind::Pseudoeffect, ModelKind::Cqrl}) {
    const auto oracle = naive_oracle(k, 3);
    CHECK_MESSAGE(key_set(collect_models({k, 3}).models) == key_set(oracle), model_kind_token(k));
  }
  for (const auto& p : naive_oracle(ModelKind::Pseudoeffect, 3)) {
    const auto& plus = std::get<PseudoeffectAlgebra>(p).plus;
    for (Element x = 0; x < 3; ++x) {
      for (Element y = 0; y < 3; ++y) CHECK(plus.at(x, y) == plus.at(y, x));
    }
  }
}

TEST_CASE("lattice effect algebras of size 4 contain the three named ones") {
  const auto result = collect_models({ModelKind::LatticeEffect, 4, true});
  CHECK(result.models.size() >= 3);
  for (const char* name : {"mv4", "diamond", "hsum-mv3"}) {
    bool found = false;
    for (const auto& m : result.models) found = found || are_isomorphic(m, entry(name)).isomorphic;
    CHECK_MESSAGE(found, name);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const char* names[] = {"mv4", "diamond", "hsum-mv3"};
      CHECK_FALSE(are_isomorphic(entry(names[i]), entry(names[j])).isomorphic);
    }
  }
}

TEST_CASE("every emitted model passes its checker") {
  for (ModelKind k : kAllModelKinds) {
    const auto [lo, hi] = supported_window(k);
    for (std::size_t n = lo; n <= std::min<std::size_t>(hi, 4); ++n) {
      for (const auto& m : collect_models({k, n}).models) {
        CHECK(check_axioms(m).passed());
        CHECK(satisfies_refinement(k, m));
      }
    }
  }
}

TEST_CASE("iso reduction and orbit counts") {
  for (ModelKind k : kAllModelKinds) {
    const auto [lo, hi] = supported_window(k);
    for (std::size_t n = lo; n <= std::min<std::size_t>(hi, 5); ++n) {
      const auto all = collect_models({k, n});
      const auto reps = collect_models({k, n, true});
      CHECK(reps.models.size() == all.summary.iso_classes);
      CHECK(reps.summary.iso_classes == all.summary.iso_classes);
      std::size_t weighted = 0;
      for (std::size_t i = 0; i < reps.models.size(); ++i) {
        weighted += factorial(n - 2) / automorphism_count(reps.models[i]);
        for (std::size_t j = i + 1; j < reps.models.size(); ++j) {
          CHECK_FALSE(are_isomorphic(reps.models[i], reps.models[j]).isomorphic);
        }
      }
      CHECK(weighted == all.summary.raw_count);
      CHECK(all.models.size() == all.summary.raw_count);
    }
  }
}

TEST_CASE("isomorphism witnesses") {
  const AnyAlgebra d = entry("diamond");
  const IsoResult self = are_isomorphic(d, d);
  CHECK(self.isomorphic);
  CHECK(self.permutation == std::vector<Element>{0, 1, 2, 3});

  const AnyAlgebra relabelled = swapped(std::get<EffectAlgebra>(d), 1, 2);
  const IsoResult t = are_isomorphic(d, relabelled);
  CHECK(t.isomorphic);
  // Swapping a and b fixes the diamond: identity and transposition both qualify.
  CHECK(automorphism_count(d) == 2);

  const AnyAlgebra mv4 = entry("mv4");
  const AnyAlgebra mv4_swapped = swapped(std::get<EffectAlgebra>(mv4), 1, 2);
  CHECK(table_key(mv4) != table_key(mv4_swapped));
  const IsoResult m = are_isomorphic(mv4, mv4_swapped);
  CHECK(m.isomorphic);
  CHECK(m.permutation == std::vector<Element>{0, 2, 1, 3});
  CHECK(canonical_key(mv4) == canonical_key(mv4_swapped));

  CHECK_FALSE(are_isomorphic(mv4, d).isomorphic);
  CHECK_THROWS_AS(are_isomorphic(mv4, entry("mv4-pseudo")), std::invalid_argument);
}

TEST_CASE("limits truncate cleanly and emission order is stable") {
  const auto full = collect_models({ModelKind::Effect, 5});
  const auto capped = collect_models({ModelKind::Effect, 5, false, 3});
  CHECK(capped.summary.truncated);
  CHECK(capped.summary.emitted == 3);
  REQUIRE(capped.models.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(table_key(capped.models[i]) == table_key(full.models[i]));
  const auto exact = collect_models({ModelKind::Effect, 5, false, full.models.size()});
  CHECK_FALSE(exact.summary.truncated);

  const auto again = collect_models({ModelKind::Effect, 5});
  REQUIRE(again.models.size() == full.models.size());
  for (std::size_t i = 0; i < full.models.size(); ++i) {
    CHECK(table_key(again.models[i]) == table_key(full.models[i]));
  }
}

TEST_CASE("size windows") {
  CHECK_THROWS_AS(collect_models({ModelKind::Effect, 7}), EnumerationError);
  CHECK_THROWS_AS(collect_models({ModelKind::Effect, 1}), EnumerationError);
  CHECK_THROWS_AS(collect_models({ModelKind::Cqrl, 5}), EnumerationError);
  CHECK_THROWS_AS(naive_oracle(ModelKind::Effect, 4), EnumerationError);
  CHECK_NOTHROW(collect_models({ModelKind::Pseudoeffect, 6}));
}

TEST_CASE("catalog entries pass their checkers") {
  CHECK(catalog().size() >= 10);
  for (const auto& e : catalog()) CHECK_MESSAGE(check_axioms(e.algebra).passed(), e.name);
  CHECK_FALSE(find_catalog_entry("nonesuch").has_value());
  for (const char* name : {"boolean2", "mv3", "mv4", "diamond", "hsum-mv3"}) {
    CHECK(find_catalog_entry(name).has_value());
    CHECK(find_catalog_entry(std::string(name) + "-pseudo").has_value());
  }
}
