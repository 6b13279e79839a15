#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "qrlab/algebra.hpp"

namespace qrlab {

enum class ModelKind {
  Effect,
  LatticeEffect,
  Pseudoeffect,
  GoodLatticePseudoeffect,
  Cqrl,
  CqrlDivisible,
  Qrl,
  QrlDivisible,
};

inline constexpr ModelKind kAllModelKinds[] = {
    ModelKind::Effect, ModelKind::LatticeEffect, ModelKind::Pseudoeffect,
    ModelKind::GoodLatticePseudoeffect, ModelKind::Cqrl, ModelKind::CqrlDivisible,
    ModelKind::Qrl, ModelKind::QrlDivisible,
};

/// "effect", "lattice-effect", "pseudoeffect", "good-lattice-pseudoeffect",
/// "cqrl", "cqrl-divisible", "qrl", "qrl-divisible".
std::string_view model_kind_token(ModelKind kind);
std::optional<ModelKind> parse_model_kind(std::string_view token);
AlgebraKind base_kind(ModelKind kind);

/// Inclusive size window the pruned search supports for a kind.
std::pair<std::size_t, std::size_t> supported_window(ModelKind kind);

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EnumerationTask {
  ModelKind kind = ModelKind::Effect;
  std::size_t size = 2;
  bool up_to_iso = false;
  std::optional<std::size_t> limit;
};

struct EnumerationSummary {
  /// Labelled models met by the search (zero = 0, one = n-1).
  std::size_t raw_count = 0;
  /// Distinct isomorphism classes among them.
  std::size_t iso_classes = 0;
  /// Models handed to the sink.
  std::size_t emitted = 0;
  /// The limit stopped the search before it finished.
  bool truncated = false;
};

using ModelSink = std::function<void(const AnyAlgebra&)>;

/// Backtracking search over table cells with propagation: unit laws, the
/// 1+x rule, complement uniqueness, commutative mirroring, partial
/// associativity, and the definedness rule of odot. Lattice-ness, goodness
/// and divisibility are post-filters. Emission order is deterministic.
/// Throws EnumerationError for sizes outside supported_window(kind).
EnumerationSummary enumerate_models(const EnumerationTask& task, const ModelSink& sink);

struct EnumerationResult {
  std::vector<AnyAlgebra> models;
  EnumerationSummary summary;
};
EnumerationResult collect_models(const EnumerationTask& task);

/// Generate-and-test over every table assignment (zero = 0, one = n-1),
/// filtered by the axiom checkers alone. Laws are applied table by table as
/// soon as the tables they read are fixed. Only sizes up to 3.
std::vector<AnyAlgebra> naive_oracle(ModelKind kind, std::size_t size);

/// Whether a base-kind model belongs to the refined kind (lattice, good,
/// divisible). Uses the checkers.
bool satisfies_refinement(ModelKind kind, const AnyAlgebra& a);

/// All lattices on n labelled elements with bottom 0 and top n-1.
std::vector<LatticeTables> enumerate_bounded_lattices(std::size_t n);

struct IsoResult {
  bool isomorphic = false;
  /// perm[x] in b corresponds to x in a.
  std::vector<Element> permutation;
};

/// Searches bijections sending zero to zero and one to one that carry every
/// table of a onto b. Throws std::invalid_argument on kind mismatch.
IsoResult are_isomorphic(const AnyAlgebra& a, const AnyAlgebra& b);

/// Lexicographically least encoding over permutations fixing zero and one.
std::vector<int> canonical_key(const AnyAlgebra& a);

/// Permutations fixing zero and one that map a onto itself.
std::size_t automorphism_count(const AnyAlgebra& a);

/// Table-tuple key used for set comparisons.
std::vector<int> table_key(const AnyAlgebra& a);

}  // namespace qrlab
