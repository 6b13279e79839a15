#pragma once

#include <variant>

#include "qrlab/finite_core.hpp"
#include "qrlab/report.hpp"

namespace qrlab {

/// An effect algebra candidate (E, +, ', 0, 1). Whether it is one is decided
/// by check_effect_axioms; nothing here validates on construction.
struct EffectAlgebra {
  Carrier carrier;
  PartialBinaryTable plus;
  UnaryTable comp;
  Element zero = 0;
  Element one = 0;

  std::size_t size() const { return carrier.size(); }
  bool operator==(const EffectAlgebra&) const = default;
};

struct LatticeEffectAlgebra {
  EffectAlgebra base;
  /// Lattice over the induced order of base.
  LatticeTables lattice;
};

/// E1..E4. Throws StructuralError if table shapes disagree with the carrier.
///
///  E1  x+y defined iff y+x defined, and then equal
///  E2  (x+y)+z defined iff x+(y+z) defined, and then equal
///  E3  comp(x) is the unique u with x+u = 1
///  E4  1+x defined implies x = 0
CheckReport check_effect_axioms(const EffectAlgebra& e, const CheckOptions& options = {});

/// x <= y iff x+z = y for some z. Returns the poset-law report if the relation
/// is not a bounded poset with bottom zero and top one.
std::variant<BoundedPoset, CheckReport> derive_induced_order(const EffectAlgebra& e);

/// derive_induced_order followed by lattice_from_poset. A poset failure is
/// reported as NotALattice on (zero, zero) with missing = "order".
std::variant<LatticeEffectAlgebra, NotALattice> detect_lattice_effect(const EffectAlgebra& e);

/// The seven standard properties LEM-i .. LEM-vii, checked over all tuples:
///   i    a'' = a
///   ii   a <= b implies b' <= a'
///   iii  a+b defined iff a <= b'
///   iv   a <= b, b+c defined imply a+c defined and a+c <= b+c
///   v    a <= b implies a+(a+b')' = b
///   vi   a+0 = 0+a = a
///   vii  0' = 1 and 1' = 0
CheckReport check_effect_lemma_properties(const EffectAlgebra& e, const BoundedPoset& order,
                                          const CheckOptions& options = {});
CheckReport check_effect_lemma_properties(const LatticeEffectAlgebra& le,
                                          const CheckOptions& options = {});

}  // namespace qrlab
