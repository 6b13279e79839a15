#pragma once

#include <variant>

#include "qrlab/effect.hpp"
#include "qrlab/finite_core.hpp"
#include "qrlab/report.hpp"

namespace qrlab {

/// A pseudoeffect algebra candidate (P, +, bar, tilde, 0, 1); + need not be
/// commutative. bar(x) is the left complement (bar(x)+x = 1), tilde(x) the
/// right one (x+tilde(x) = 1).
struct PseudoeffectAlgebra {
  Carrier carrier;
  PartialBinaryTable plus;
  UnaryTable bar;
  UnaryTable tilde;
  Element zero = 0;
  Element one = 0;

  std::size_t size() const { return carrier.size(); }
  bool operator==(const PseudoeffectAlgebra&) const = default;
};

struct GoodLatticePseudoeffectAlgebra {
  PseudoeffectAlgebra base;
  LatticeTables lattice;
};

/// P1..P4:
///  P1  x+y defined implies u+x = y+w = x+y for some u, w
///  P2  (x+y)+z defined iff x+(y+z) defined, and then equal
///  P3  bar(x) unique with u+x = 1, tilde(x) unique with x+w = 1
///  P4  1+x or x+1 defined implies x = 0
CheckReport check_pseudoeffect_axioms(const PseudoeffectAlgebra& p,
                                      const CheckOptions& options = {});

/// GOOD compares tilde(bar x + bar y) with bar(tilde x + tilde y) over exactly
/// the pairs with tilde(x) <= y. GOOD-DEF collects pairs where either side is
/// undefined.
CheckReport check_goodness(const PseudoeffectAlgebra& p, const BoundedPoset& order,
                           const CheckOptions& options = {});

/// x <= y iff x+z = y for some z. The left-witness relation (e+x = y) is
/// compared against it; a discrepancy comes back as a PLEM-ix report.
std::variant<BoundedPoset, CheckReport> derive_induced_order_pseudo(const PseudoeffectAlgebra& p);

/// Lattice + goodness detection. On rejection the report says why: the order
/// (poset laws or PLEM-ix), LATTICE, or GOOD/GOOD-DEF.
std::variant<GoodLatticePseudoeffectAlgebra, CheckReport> detect_good_lattice_pseudo(
    const PseudoeffectAlgebra& p);

/// Pseudoeffect lemma PLEM-i .. PLEM-ix over all tuples.
CheckReport check_pseudo_lemma_properties(const PseudoeffectAlgebra& p, const BoundedPoset& order,
                                          const CheckOptions& options = {});
CheckReport check_pseudo_lemma_properties(const GoodLatticePseudoeffectAlgebra& gp,
                                          const CheckOptions& options = {});

/// Reads an effect algebra as a pseudoeffect algebra with bar = tilde = comp.
PseudoeffectAlgebra as_pseudoeffect(const EffectAlgebra& e);
GoodLatticePseudoeffectAlgebra as_pseudoeffect(const LatticeEffectAlgebra& le);

}  // namespace qrlab
