#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "qrlab/effect.hpp"
#include "qrlab/pseudoeffect.hpp"
#include "qrlab/quasires.hpp"

namespace qrlab {

enum class AlgebraKind { Effect, Pseudoeffect, Cqrl, Qrl };

using AnyAlgebra = std::variant<EffectAlgebra, PseudoeffectAlgebra, CommQResLattice, QResLattice>;

AlgebraKind kind_of(const AnyAlgebra& a);
/// "effect", "pseudoeffect", "cqrl", "qrl"; the kind line of the text format.
std::string_view kind_token(AlgebraKind kind);
std::optional<AlgebraKind> parse_kind_token(std::string_view token);

const Carrier& carrier_of(const AnyAlgebra& a);

/// Tables in a fixed per-kind order:
///   effect        partial {plus}                 unary {comp}
///   pseudoeffect  partial {plus}                 unary {bar, tilde}
///   cqrl          partial {odot}  total {join, meet, arrow}
///   qrl           partial {odot}  total {join, meet, arrow, leadsto}
Structure structure_of(const AnyAlgebra& a);

/// Inverse of structure_of. Lattice kinds derive their order from meet.
AnyAlgebra from_structure(AlgebraKind kind, const Structure& s, Carrier carrier);

/// The kind's axiom checker.
CheckReport check_axioms(const AnyAlgebra& a, const CheckOptions& options = {});

}  // namespace qrlab
