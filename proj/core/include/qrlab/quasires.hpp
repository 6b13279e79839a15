#pragma once

#include "qrlab/finite_core.hpp"
#include "qrlab/report.hpp"

namespace qrlab {

/// Commutative quasiresiduated lattice candidate (C, join, meet, odot, arrow,
/// 0, 1). The complement x' is always arrow(x, 0); it is never stored.
struct CommQResLattice {
  Carrier carrier;
  LatticeTables lattice;
  PartialBinaryTable odot;
  TotalBinaryTable arrow;
  Element zero = 0;
  Element one = 0;

  std::size_t size() const { return carrier.size(); }
  Element prime(Element x) const { return arrow.at(x, zero); }
  bool leq(Element x, Element y) const { return lattice.order.leq(x, y); }
  bool operator==(const CommQResLattice&) const = default;
};

/// Quasiresiduated lattice candidate with two implications. bar(x) is
/// arrow(x, 0), tilde(x) is leadsto(x, 0).
struct QResLattice {
  Carrier carrier;
  LatticeTables lattice;
  PartialBinaryTable odot;
  TotalBinaryTable arrow;
  TotalBinaryTable leadsto;
  Element zero = 0;
  Element one = 0;

  std::size_t size() const { return carrier.size(); }
  Element bar(Element x) const { return arrow.at(x, zero); }
  Element tilde(Element x) const { return leadsto.at(x, zero); }
  bool leq(Element x, Element y) const { return lattice.order.leq(x, y); }
  bool operator==(const QResLattice&) const = default;
};

/// LAT, C1, C2, C3.
///  C1  (C, odot, 1) is a partial commutative monoid; x odot y defined iff x' <= y.
///      Undefined (x v y') odot y found while scanning C3 is reported here.
///  C2  x'' = x, and x <= y implies y' <= x'
///  C3  (x v y') odot y <= y ^ z  iff  x v y' <= y -> z, for all x, y, z
CheckReport check_cqrl_axioms(const CommQResLattice& c, const CheckOptions& options = {});

/// Single laws, for staged generate-and-test. Each reads only the tables its
/// law mentions (C1: order, odot, arrow(-, 0); C2: order, arrow(-, 0)).
LawRecord check_c1(const CommQResLattice& c, const CheckOptions& options = {});
LawRecord check_c2(const CommQResLattice& c, const CheckOptions& options = {});
/// C3 without the definedness defects (those belong to C1).
LawRecord check_c3(const CommQResLattice& c, const CheckOptions& options = {});

/// CDIV: x <= y implies y odot (y -> x) = x. CDIV-DEF: the product is undefined.
CheckReport check_cqrl_divisibility(const CommQResLattice& c, const CheckOptions& options = {});

/// LAT, Q1..Q5.
///  Q1  (Q, odot, 1) is a partial monoid; x odot y defined iff tilde x <= y
///  Q2  tilde(bar x) = bar(tilde x) = x; bar and tilde antitone
///  Q3  (x v bar y) odot y <= y ^ z  iff  x v bar y <= y -> z
///  Q4  y odot (x v tilde y) <= y ^ z  iff  x v tilde y <= y ~> z
///  Q5  tilde(bar x odot bar y) = bar(tilde x odot tilde y) where both products
///      are defined; one-sided definedness is a Q5 defect
CheckReport check_qrl_axioms(const QResLattice& q, const CheckOptions& options = {});

LawRecord check_q1(const QResLattice& q, const CheckOptions& options = {});
LawRecord check_q2(const QResLattice& q, const CheckOptions& options = {});
LawRecord check_q3(const QResLattice& q, const CheckOptions& options = {});
LawRecord check_q4(const QResLattice& q, const CheckOptions& options = {});
LawRecord check_q5(const QResLattice& q, const CheckOptions& options = {});

/// QDIV: x <= y implies (y -> x) odot y = y odot (y ~> x) = x.
CheckReport check_qrl_divisibility(const QResLattice& q, const CheckOptions& options = {});

/// Thrown when a derived operation hits an undefined product that an axiom
/// would have guaranteed; it signals an upstream violation.
class ConstructionDefect : public std::runtime_error {
 public:
  ConstructionDefect(std::string what, Element x, Element y)
      : std::runtime_error(std::move(what)), x(x), y(y) {}
  Element x;
  Element y;
};

/// x (x) y := (x v y') odot y. Total whenever C1 holds.
Element otimes(const CommQResLattice& c, Element x, Element y);

/// OTIMES-UNIT: x (x) 1 = 1 (x) x = x.
/// OTIMES-ADJ:  x (x) y <= y ^ z iff x v y' <= y -> z.
/// ARROW-MEET:  y -> z = y -> (y ^ z); a law only for structures built from an
///              effect algebra, otherwise recorded as informational.
CheckReport check_otimes_equivalences(const CommQResLattice& c, bool from_effect_algebra,
                                      const CheckOptions& options = {});

/// The commutative structure seen as a general one with leadsto := arrow.
QResLattice lift_to_qrl(const CommQResLattice& c);

}  // namespace qrlab
