#pragma once

// Finite carriers, operation tables, posets and lattices.
//
// Elements are dense indices 0..n-1. Labels exist only for presentation.
// Partial tables keep "undefined" as its own cell state (std::nullopt), never
// as a reserved element value.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qrlab/element.hpp"
#include "qrlab/report.hpp"

namespace qrlab {

/// The token reserved for undefined cells in the text format.
inline constexpr std::string_view kUndefinedToken = ".";

class Carrier {
 public:
  explicit Carrier(std::vector<std::string> labels);

  /// Labels "0", "a", "b", ..., "1": bottom first, top last.
  static Carrier with_default_labels(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Element x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;

  bool operator==(const Carrier&) const = default;

 private:
  std::vector<std::string> labels_;
};

class PartialBinaryTable {
 public:
  explicit PartialBinaryTable(std::size_t n = 0);

  std::size_t size() const { return n_; }
  std::optional<Element> at(Element x, Element y) const { return cells_[x * n_ + y]; }
  bool defined(Element x, Element y) const { return cells_[x * n_ + y].has_value(); }
  void set(Element x, Element y, std::optional<Element> value);

  bool operator==(const PartialBinaryTable&) const = default;

 private:
  std::size_t n_;
  std::vector<std::optional<Element>> cells_;
};

class TotalBinaryTable {
 public:
  explicit TotalBinaryTable(std::size_t n = 0, Element fill = 0);

  std::size_t size() const { return n_; }
  Element at(Element x, Element y) const { return cells_[x * n_ + y]; }
  void set(Element x, Element y, Element value);

  bool operator==(const TotalBinaryTable&) const = default;

 private:
  std::size_t n_;
  std::vector<Element> cells_;
};

class UnaryTable {
 public:
  explicit UnaryTable(std::size_t n = 0);
  explicit UnaryTable(std::vector<Element> map, std::size_t n);

  std::size_t size() const { return map_.size(); }
  Element at(Element x) const { return map_[x]; }
  Element operator()(Element x) const { return map_[x]; }
  void set(Element x, Element value);
  const std::vector<Element>& values() const { return map_; }

  bool operator==(const UnaryTable&) const = default;

 private:
  std::vector<Element> map_;
};

/// Square boolean matrix; holds(x, y) reads "x R y".
class Relation {
 public:
  explicit Relation(std::size_t n = 0);
  /// Throws StructuralError if the rows are ragged or not n x n.
  static Relation from_rows(const std::vector<std::vector<bool>>& rows);

  std::size_t size() const { return n_; }
  bool holds(Element x, Element y) const { return bits_[x * n_ + y] != 0; }
  void set(Element x, Element y, bool value) { bits_[x * n_ + y] = value ? 1 : 0; }

  bool operator==(const Relation&) const = default;

 private:
  std::size_t n_;
  std::vector<unsigned char> bits_;
};

struct BoundedPoset {
  Relation relation;
  Element bottom = 0;
  Element top = 0;

  std::size_t size() const { return relation.size(); }
  bool leq(Element x, Element y) const { return relation.holds(x, y); }

  bool operator==(const BoundedPoset&) const = default;
};

struct LatticeTables {
  TotalBinaryTable join;
  TotalBinaryTable meet;
  BoundedPoset order;

  std::size_t size() const { return order.size(); }
  bool operator==(const LatticeTables&) const = default;
};

struct NotALattice {
  Element x = 0;
  Element y = 0;
  /// "join" or "meet": which bound is missing or not unique.
  std::string missing;
};

/// Checks reflexivity, antisymmetry, transitivity and bounds. On failure the
/// report holds every violated law (REFL, ANTISYM, TRANS, BOUNDED).
std::variant<BoundedPoset, CheckReport> validate_poset(const Relation& rel, Element bottom,
                                                       Element top);

/// Join and meet by scanning upper and lower bound sets.
std::variant<LatticeTables, NotALattice> lattice_from_poset(const BoundedPoset& p);

/// Lattice tables read from operation tables (a file, a mutation). The order is
/// taken as x <= y iff meet(x, y) = x and is not validated here; use
/// check_lattice_tables for that.
LatticeTables lattice_from_operations(TotalBinaryTable join, TotalBinaryTable meet,
                                      Element bottom, Element top);

/// LAT: the order is a bounded poset with the given bounds and join/meet are
/// its least upper and greatest lower bounds.
LawRecord check_lattice_tables(const LatticeTables& lattice, const CheckOptions& options = {});

struct TableLaw {
  bool holds = true;
  std::vector<Element> witness;
};

/// cell(x,y) defined iff cell(y,x) defined, and equal when defined.
TableLaw table_is_commutative(const PartialBinaryTable& t);

/// (x.y).z defined iff x.(y.z) defined, and equal when both defined.
TableLaw table_is_associative_partial(const PartialBinaryTable& t);

/// Scanners shared by the axiom checkers: every failing pair (x < y) or
/// triple goes to rec, in lexicographic order.
void scan_commutativity(const PartialBinaryTable& t, LawRecorder& rec);
void scan_associativity(const PartialBinaryTable& t, LawRecorder& rec);

/// Structure-agnostic view of an algebra: every table it carries, in a fixed
/// order. Used for isomorphism tests and set keys.
struct Structure {
  std::size_t size = 0;
  Element zero = 0;
  Element one = 0;
  std::vector<PartialBinaryTable> partial;
  std::vector<TotalBinaryTable> total;
  std::vector<UnaryTable> unary;

  bool operator==(const Structure&) const = default;
};

/// Image of s under the bijection perm (perm[x] is the new index of x).
Structure permuted(const Structure& s, const std::vector<Element>& perm);

/// Flat integer encoding; undefined cells encode as -1. Two structures of the
/// same kind are table-identical iff their encodings are equal.
std::vector<int> encode(const Structure& s);

}  // namespace qrlab
