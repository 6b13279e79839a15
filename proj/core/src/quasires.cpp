#include "qrlab/quasires.hpp"

#include <utility>

#include "shape.hpp"

namespace qrlab {

namespace {

void require_lattice_shapes(std::size_t n, const LatticeTables& l, const PartialBinaryTable& odot,
                            const TotalBinaryTable& arrow, Element zero, Element one) {
  detail::require_size(n, l.order.size(), "lattice order");
  detail::require_size(n, l.join.size(), "join table");
  detail::require_size(n, l.meet.size(), "meet table");
  detail::require_size(n, odot.size(), "odot table");
  detail::require_size(n, arrow.size(), "arrow table");
  detail::require_element(n, zero, "zero");
  detail::require_element(n, one, "one");
  detail::require_element(n, l.order.bottom, "lattice bottom");
  detail::require_element(n, l.order.top, "lattice top");
}

void require_shapes(const CommQResLattice& c) {
  require_lattice_shapes(c.size(), c.lattice, c.odot, c.arrow, c.zero, c.one);
}

void require_shapes(const QResLattice& q) {
  require_lattice_shapes(q.size(), q.lattice, q.odot, q.arrow, q.zero, q.one);
  detail::require_size(q.size(), q.leadsto.size(), "leadsto table");
}

// Unit laws, associativity, definedness rule. defined_when(x, y) is the
// required definedness of x odot y.
template <typename Rule>
void scan_partial_monoid(const PartialBinaryTable& odot, Element one, Rule defined_when,
                         LawRecorder& rec) {
  const std::size_t n = odot.size();
  for (Element x = 0; x < n && !rec.done(); ++x) {
    if (odot.at(x, one) != x) rec.violation({x}, "x odot 1 != x");
    if (odot.at(one, x) != x) rec.violation({x}, "1 odot x != x");
  }
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = 0; y < n && !rec.done(); ++y) {
      if (odot.defined(x, y) != defined_when(x, y)) {
        rec.violation({x, y}, odot.defined(x, y) ? "defined outside its domain"
                                                 : "undefined inside its domain");
      }
    }
  }
  scan_associativity(odot, rec);
}

}  // namespace

LawRecord check_c1(const CommQResLattice& c, const CheckOptions& options) {
  require_shapes(c);
  const std::size_t n = c.size();
  LawRecorder rec("C1", "partial commutative monoid, x odot y defined iff x' <= y", options);
  scan_partial_monoid(
      c.odot, c.one, [&](Element x, Element y) { return c.leq(c.prime(x), y); }, rec);
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = x + 1; y < n && !rec.done(); ++y) {
      if (c.odot.at(x, y) != c.odot.at(y, x)) rec.violation({x, y}, "not commutative");
    }
  }
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = 0; y < n && !rec.done(); ++y) {
      const Element lhs = c.lattice.join.at(x, c.prime(y));
      if (!c.odot.defined(lhs, y)) rec.violation({x, y}, "(x v y') odot y undefined");
    }
  }
  return std::move(rec).finish();
}

LawRecord check_c2(const CommQResLattice& c, const CheckOptions& options) {
  require_shapes(c);
  const std::size_t n = c.size();
  LawRecorder rec("C2", "x'' = x, and x <= y implies y' <= x'", options);
  for (Element x = 0; x < n && !rec.done(); ++x) {
    if (c.prime(c.prime(x)) != x) rec.violation({x}, "x'' != x");
  }
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = 0; y < n && !rec.done(); ++y) {
      if (c.leq(x, y) && !c.leq(c.prime(y), c.prime(x))) rec.violation({x, y}, "not antitone");
    }
  }
  return std::move(rec).finish();
}

LawRecord check_c3(const CommQResLattice& c, const CheckOptions& options) {
  require_shapes(c);
  const std::size_t n = c.size();
  LawRecorder rec("C3", "(x v y') odot y <= y ^ z iff x v y' <= y -> z", options);
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = 0; y < n && !rec.done(); ++y) {
      const Element lhs = c.lattice.join.at(x, c.prime(y));
      const auto prod = c.odot.at(lhs, y);
      if (!prod) continue;
      for (Element z = 0; z < n && !rec.done(); ++z) {
        const bool left = c.leq(*prod, c.lattice.meet.at(y, z));
        const bool right = c.leq(lhs, c.arrow.at(y, z));
        if (left != right) rec.violation({x, y, z}, left ? "only the left side holds"
                                                         : "only the right side holds");
      }
    }
  }
  return std::move(rec).finish();
}

CheckReport check_cqrl_axioms(const CommQResLattice& c, const CheckOptions& options) {
  CheckReport report;
  report.add(check_lattice_tables(c.lattice, options));
  report.add(check_c1(c, options));
  report.add(check_c2(c, options));
  report.add(check_c3(c, options));
  return report;
}

CheckReport check_cqrl_divisibility(const CommQResLattice& c, const CheckOptions& options) {
  require_shapes(c);
  const std::size_t n = c.size();
  LawRecorder value("CDIV", "x <= y implies y odot (y -> x) = x", options);
  LawRecorder defined("CDIV-DEF", "y odot (y -> x) is defined for x <= y", options);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!c.leq(x, y)) continue;
      const auto prod = c.odot.at(y, c.arrow.at(y, x));
      if (!prod) defined.violation({x, y});
      else if (*prod != x) value.violation({x, y});
    }
  }
  CheckReport report;
  report.add(std::move(value).finish());
  report.add(std::move(defined).finish());
  return report;
}

LawRecord check_q1(const QResLattice& q, const CheckOptions& options) {
  require_shapes(q);
  const std::size_t n = q.size();
  LawRecorder rec("Q1", "partial monoid, x odot y defined iff tilde x <= y", options);
  scan_partial_monoid(
      q.odot, q.one, [&](Element x, Element y) { return q.leq(q.tilde(x), y); }, rec);
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = 0; y < n && !rec.done(); ++y) {
      if (!q.odot.defined(q.lattice.join.at(x, q.bar(y)), y)) {
        rec.violation({x, y}, "(x v bar y) odot y undefined");
      }
      if (!q.odot.defined(y, q.lattice.join.at(x, q.tilde(y)))) {
        rec.violation({x, y}, "y odot (x v tilde y) undefined");
      }
    }
  }
  return std::move(rec).finish();
}

LawRecord check_q2(const QResLattice& q, const CheckOptions& options) {
  require_shapes(q);
  const std::size_t n = q.size();
  LawRecorder rec("Q2", "tilde(bar x) = bar(tilde x) = x; bar, tilde antitone", options);
  for (Element x = 0; x < n && !rec.done(); ++x) {
    if (q.tilde(q.bar(x)) != x) rec.violation({x}, "tilde(bar x) != x");
    if (q.bar(q.tilde(x)) != x) rec.violation({x}, "bar(tilde x) != x");
  }
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = 0; y < n && !rec.done(); ++y) {
      if (!q.leq(x, y)) continue;
      if (!q.leq(q.bar(y), q.bar(x))) rec.violation({x, y}, "bar not antitone");
      if (!q.leq(q.tilde(y), q.tilde(x))) rec.violation({x, y}, "tilde not antitone");
    }
  }
  return std::move(rec).finish();
}

LawRecord check_q3(const QResLattice& q, const CheckOptions& options) {
  require_shapes(q);
  const std::size_t n = q.size();
  LawRecorder rec("Q3", "(x v bar y) odot y <= y ^ z iff x v bar y <= y -> z", options);
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = 0; y < n && !rec.done(); ++y) {
      const Element lhs = q.lattice.join.at(x, q.bar(y));
      const auto prod = q.odot.at(lhs, y);
      if (!prod) continue;
      for (Element z = 0; z < n && !rec.done(); ++z) {
        if (q.leq(*prod, q.lattice.meet.at(y, z)) != q.leq(lhs, q.arrow.at(y, z))) {
          rec.violation({x, y, z});
        }
      }
    }
  }
  return std::move(rec).finish();
}

LawRecord check_q4(const QResLattice& q, const CheckOptions& options) {
  require_shapes(q);
  const std::size_t n = q.size();
  LawRecorder rec("Q4", "y odot (x v tilde y) <= y ^ z iff x v tilde y <= y ~> z", options);
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = 0; y < n && !rec.done(); ++y) {
      const Element rhs = q.lattice.join.at(x, q.tilde(y));
      const auto prod = q.odot.at(y, rhs);
      if (!prod) continue;
      for (Element z = 0; z < n && !rec.done(); ++z) {
        if (q.leq(*prod, q.lattice.meet.at(y, z)) != q.leq(rhs, q.leadsto.at(y, z))) {
          rec.violation({x, y, z});
        }
      }
    }
  }
  return std::move(rec).finish();
}

LawRecord check_q5(const QResLattice& q, const CheckOptions& options) {
  require_shapes(q);
  const std::size_t n = q.size();
  LawRecorder rec("Q5", "tilde(bar x odot bar y) = bar(tilde x odot tilde y)", options);
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = 0; y < n && !rec.done(); ++y) {
      const auto left = q.odot.at(q.bar(x), q.bar(y));
      const auto right = q.odot.at(q.tilde(x), q.tilde(y));
      if (left.has_value() != right.has_value()) {
        rec.violation({x, y}, "one side defined, the other undefined");
      } else if (left && q.tilde(*left) != q.bar(*right)) {
        rec.violation({x, y}, "values differ");
      }
    }
  }
  return std::move(rec).finish();
}

CheckReport check_qrl_axioms(const QResLattice& q, const CheckOptions& options) {
  CheckReport report;
  report.add(check_lattice_tables(q.lattice, options));
  report.add(check_q1(q, options));
  report.add(check_q2(q, options));
  report.add(check_q3(q, options));
  report.add(check_q4(q, options));
  report.add(check_q5(q, options));
  return report;
}

CheckReport check_qrl_divisibility(const QResLattice& q, const CheckOptions& options) {
  require_shapes(q);
  const std::size_t n = q.size();
  LawRecorder value("QDIV", "x <= y implies (y -> x) odot y = y odot (y ~> x) = x", options);
  LawRecorder defined("QDIV-DEF", "(y -> x) odot y and y odot (y ~> x) defined for x <= y",
                      options);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!q.leq(x, y)) continue;
      const auto left = q.odot.at(q.arrow.at(y, x), y);
      const auto right = q.odot.at(y, q.leadsto.at(y, x));
      if (!left) defined.violation({x, y}, "(y -> x) odot y undefined");
      else if (*left != x) value.violation({x, y}, "(y -> x) odot y != x");
      if (!right) defined.violation({x, y}, "y odot (y ~> x) undefined");
      else if (*right != x) value.violation({x, y}, "y odot (y ~> x) != x");
    }
  }
  CheckReport report;
  report.add(std::move(value).finish());
  report.add(std::move(defined).finish());
  return report;
}

Element otimes(const CommQResLattice& c, Element x, Element y) {
  const auto v = c.odot.at(c.lattice.join.at(x, c.prime(y)), y);
  if (!v) throw ConstructionDefect("(x v y') odot y is undefined", x, y);
  return *v;
}

CheckReport check_otimes_equivalences(const CommQResLattice& c, bool from_effect_algebra,
                                      const CheckOptions& options) {
  require_shapes(c);
  const std::size_t n = c.size();
  auto safe_otimes = [&](Element x, Element y) -> std::optional<Element> {
    return c.odot.at(c.lattice.join.at(x, c.prime(y)), y);
  };

  LawRecorder unit("OTIMES-UNIT", "x (x) 1 = 1 (x) x = x", options);
  for (Element x = 0; x < n; ++x) {
    if (safe_otimes(x, c.one) != x) unit.violation({x}, "x (x) 1 != x");
    if (safe_otimes(c.one, x) != x) unit.violation({x}, "1 (x) x != x");
  }

  LawRecorder adj("OTIMES-ADJ", "x (x) y <= y ^ z iff x v y' <= y -> z", options);
  for (Element x = 0; x < n && !adj.done(); ++x) {
    for (Element y = 0; y < n && !adj.done(); ++y) {
      const auto t = safe_otimes(x, y);
      if (!t) {
        adj.violation({x, y}, "x (x) y undefined");
        continue;
      }
      const Element lhs = c.lattice.join.at(x, c.prime(y));
      for (Element z = 0; z < n; ++z) {
        if (c.leq(*t, c.lattice.meet.at(y, z)) != c.leq(lhs, c.arrow.at(y, z))) {
          adj.violation({x, y, z});
        }
      }
    }
  }

  LawRecorder meet("ARROW-MEET", "y -> z = y -> (y ^ z)", options);
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      if (c.arrow.at(y, z) != c.arrow.at(y, c.lattice.meet.at(y, z))) meet.violation({y, z});
    }
  }

  CheckReport report;
  report.add(std::move(unit).finish());
  report.add(std::move(adj).finish());
  LawRecord m = std::move(meet).finish();
  m.informational = !from_effect_algebra;
  report.add(std::move(m));
  return report;
}

QResLattice lift_to_qrl(const CommQResLattice& c) {
  return QResLattice{c.carrier, c.lattice, c.odot, c.arrow, c.arrow, c.zero, c.one};
}

}  // namespace qrlab
