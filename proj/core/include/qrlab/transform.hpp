#pragma once

#include <optional>
#include <string>

#include "qrlab/effect.hpp"
#include "qrlab/pseudoeffect.hpp"
#include "qrlab/quasires.hpp"
#include "qrlab/report.hpp"

namespace qrlab {

// The constructions below never validate their output. Whether the result
// satisfies its axiom system is for the caller to check.

/// odot(x, y) := (x' + y')' when x' <= y; arrow(x, y) := (x ^ y) + x'.
/// Lattice tables are carried over. Throws ConstructionDefect if a sum the
/// formulas need is undefined.
CommQResLattice cqrl_of_effect(const LatticeEffectAlgebra& le);

/// plus(x, y) := (x' odot y')' when x <= y'; comp := prime. The lattice of c is
/// carried as the claimed lattice of the result.
LatticeEffectAlgebra effect_of_cqrl(const CommQResLattice& c);

/// Thrown by qrl_of_pseudoeffect on a non-good input.
class PreconditionFailure : public std::runtime_error {
 public:
  PreconditionFailure(std::string what, CheckReport report)
      : std::runtime_error(std::move(what)), report(std::move(report)) {}
  CheckReport report;
};

/// odot(x, y) := tilde(bar x + bar y) when tilde x <= y;
/// arrow(x, y) := bar x + (x ^ y); leadsto(x, y) := (x ^ y) + tilde x.
/// Goodness is verified first; non-good input throws PreconditionFailure.
QResLattice qrl_of_pseudoeffect(const GoodLatticePseudoeffectAlgebra& gp);

/// plus(x, y) := tilde(bar x odot bar y) when x <= bar y; bar, tilde from the
/// implications at 0.
GoodLatticePseudoeffectAlgebra pseudoeffect_of_qrl(const QResLattice& q);

/// RT-E: E(C(le)) equals le cell by cell (plus definedness and values, comp).
CheckReport roundtrip_effect(const LatticeEffectAlgebra& le);

/// RT-P: P(Q(gp)) equals gp (plus, bar, tilde).
CheckReport roundtrip_pseudoeffect(const GoodLatticePseudoeffectAlgebra& gp);

/// Result of rebuilding a structure through the opposite construction. Probes
/// test compositions with no known guarantee.
struct ProbeReport {
  bool identical = true;
  /// Name of the first differing table ("odot", "arrow", "leadsto").
  std::string table;
  std::optional<std::pair<Element, Element>> cell;
  /// Set when the rebuild could not be carried out at all.
  std::string defect;
};

inline constexpr const char* kProbeLabel = "conjecture probe (unproven composition)";

/// Compares C(E(c)) with c.
ProbeReport probe_cqrl_image(const CommQResLattice& c);
/// Compares Q(P(q)) with q.
ProbeReport probe_qrl_image(const QResLattice& q);

/// First cell (row-major) where the tables differ, definedness included.
std::optional<std::pair<Element, Element>> first_difference(const PartialBinaryTable& a,
                                                            const PartialBinaryTable& b);
std::optional<std::pair<Element, Element>> first_difference(const TotalBinaryTable& a,
                                                            const TotalBinaryTable& b);

}  // namespace qrlab
