#include "qrlab/finite_core.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace qrlab {

namespace {

void require_index(Element value, std::size_t n, const char* what) {
  if (value >= n) {
    throw StructuralError(std::string(what) + ": value " + std::to_string(value) +
                          " out of range for carrier of size " + std::to_string(n));
  }
}

bool valid_label(const std::string& label) {
  if (label.empty() || label == kUndefinedToken) return false;
  return std::none_of(label.begin(), label.end(),
                      [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; });
}

}  // namespace

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) throw StructuralError("carrier needs at least two elements");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!valid_label(l)) throw StructuralError("invalid element label '" + l + "'");
    if (!seen.insert(l).second) throw StructuralError("duplicate element label '" + l + "'");
  }
}

Carrier Carrier::with_default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      labels.emplace_back("0");
    } else if (i + 1 == n) {
      labels.emplace_back("1");
    } else if (i <= 26) {
      labels.emplace_back(1, static_cast<char>('a' + (i - 1)));
    } else {
      labels.push_back("e" + std::to_string(i));
    }
  }
  return Carrier(std::move(labels));
}

std::optional<Element> Carrier::find(std::string_view label) const {
  for (Element i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

PartialBinaryTable::PartialBinaryTable(std::size_t n) : n_(n), cells_(n * n) {}

void PartialBinaryTable::set(Element x, Element y, std::optional<Element> value) {
  require_index(x, n_, "partial table row");
  require_index(y, n_, "partial table column");
  if (value) require_index(*value, n_, "partial table cell");
  cells_[x * n_ + y] = value;
}

TotalBinaryTable::TotalBinaryTable(std::size_t n, Element fill) : n_(n), cells_(n * n, fill) {
  if (n > 0) require_index(fill, n, "total table fill");
}

void TotalBinaryTable::set(Element x, Element y, Element value) {
  require_index(x, n_, "total table row");
  require_index(y, n_, "total table column");
  require_index(value, n_, "total table cell");
  cells_[x * n_ + y] = value;
}

UnaryTable::UnaryTable(std::size_t n) : map_(n, 0) {}

UnaryTable::UnaryTable(std::vector<Element> map, std::size_t n) : map_(std::move(map)) {
  if (map_.size() != n) throw StructuralError("unary table has wrong length");
  for (Element v : map_) require_index(v, n, "unary table");
}

void UnaryTable::set(Element x, Element value) {
  require_index(x, map_.size(), "unary table argument");
  require_index(value, map_.size(), "unary table value");
  map_[x] = value;
}

Relation::Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

Relation Relation::from_rows(const std::vector<std::vector<bool>>& rows) {
  Relation r(rows.size());
  for (Element x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != rows.size()) {
      throw StructuralError("relation row " + std::to_string(x) + " has length " +
                            std::to_string(rows[x].size()) + ", expected " +
                            std::to_string(rows.size()));
    }
    for (Element y = 0; y < rows.size(); ++y) r.set(x, y, rows[x][y]);
  }
  return r;
}

std::variant<BoundedPoset, CheckReport> validate_poset(const Relation& rel, Element bottom,
                                                       Element top) {
  const std::size_t n = rel.size();
  require_index(bottom, n, "poset bottom");
  require_index(top, n, "poset top");
  const CheckOptions options;

  LawRecorder refl("REFL", "x <= x", options);
  for (Element x = 0; x < n; ++x) {
    if (!rel.holds(x, x)) refl.violation({x});
  }
  LawRecorder antisym("ANTISYM", "x <= y and y <= x imply x = y", options);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (rel.holds(x, y) && rel.holds(y, x)) antisym.violation({x, y});
    }
  }
  LawRecorder trans("TRANS", "x <= y and y <= z imply x <= z", options);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!rel.holds(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (rel.holds(y, z) && !rel.holds(x, z)) trans.violation({x, y, z});
      }
    }
  }
  LawRecorder bounded("BOUNDED", "bottom <= x <= top", options);
  for (Element x = 0; x < n; ++x) {
    if (!rel.holds(bottom, x) || !rel.holds(x, top)) bounded.violation({x});
  }

  if (refl.clean() && antisym.clean() && trans.clean() && bounded.clean()) {
    return BoundedPoset{rel, bottom, top};
  }
  CheckReport report;
  report.add(std::move(refl).finish());
  report.add(std::move(antisym).finish());
  report.add(std::move(trans).finish());
  report.add(std::move(bounded).finish());
  return report;
}

namespace {

// Least element of the set of upper (or lower, with reversed = true) bounds.
std::optional<Element> extremal_bound(const BoundedPoset& p, Element x, Element y, bool lower) {
  const std::size_t n = p.size();
  auto le = [&](Element a, Element b) { return lower ? p.leq(b, a) : p.leq(a, b); };
  std::vector<Element> bounds;
  for (Element u = 0; u < n; ++u) {
    if (le(x, u) && le(y, u)) bounds.push_back(u);
  }
  for (Element u : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](Element v) { return le(u, v); })) return u;
  }
  return std::nullopt;
}

}  // namespace

std::variant<LatticeTables, NotALattice> lattice_from_poset(const BoundedPoset& p) {
  const std::size_t n = p.size();
  TotalBinaryTable join(n), meet(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      auto j = extremal_bound(p, x, y, false);
      if (!j) return NotALattice{x, y, "join"};
      auto m = extremal_bound(p, x, y, true);
      if (!m) return NotALattice{x, y, "meet"};
      join.set(x, y, *j);
      meet.set(x, y, *m);
    }
  }
  return LatticeTables{std::move(join), std::move(meet), p};
}

LatticeTables lattice_from_operations(TotalBinaryTable join, TotalBinaryTable meet,
                                      Element bottom, Element top) {
  const std::size_t n = meet.size();
  if (join.size() != n) throw StructuralError("join and meet tables differ in size");
  require_index(bottom, n, "lattice bottom");
  require_index(top, n, "lattice top");
  Relation rel(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) rel.set(x, y, meet.at(x, y) == x);
  }
  return LatticeTables{std::move(join), std::move(meet), BoundedPoset{std::move(rel), bottom, top}};
}

LawRecord check_lattice_tables(const LatticeTables& lattice, const CheckOptions& options) {
  const std::size_t n = lattice.size();
  if (lattice.join.size() != n || lattice.meet.size() != n) {
    throw StructuralError("lattice tables differ in size from the order");
  }
  const BoundedPoset& p = lattice.order;
  LawRecorder rec("LAT", "bounded lattice: join/meet are lub/glb of the order", options);

  auto poset = validate_poset(p.relation, p.bottom, p.top);
  if (auto* bad = std::get_if<CheckReport>(&poset)) {
    for (const auto& law : bad->laws) {
      for (const auto& w : law.witnesses) {
        switch (w.elements.size()) {
          case 1: rec.violation({w.elements[0]}, "order fails " + law.id); break;
          case 2: rec.violation({w.elements[0], w.elements[1]}, "order fails " + law.id); break;
          default:
            rec.violation({w.elements[0], w.elements[1], w.elements[2]}, "order fails " + law.id);
        }
      }
    }
    return std::move(rec).finish();
  }

  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = 0; y < n && !rec.done(); ++y) {
      const Element j = lattice.join.at(x, y);
      const Element m = lattice.meet.at(x, y);
      bool join_ok = p.leq(x, j) && p.leq(y, j);
      bool meet_ok = p.leq(m, x) && p.leq(m, y);
      for (Element u = 0; u < n && (join_ok || meet_ok); ++u) {
        if (p.leq(x, u) && p.leq(y, u) && !p.leq(j, u)) join_ok = false;
        if (p.leq(u, x) && p.leq(u, y) && !p.leq(u, m)) meet_ok = false;
      }
      if (!join_ok) rec.violation({x, y}, "join is not the least upper bound");
      if (!meet_ok) rec.violation({x, y}, "meet is not the greatest lower bound");
    }
  }
  return std::move(rec).finish();
}

void scan_commutativity(const PartialBinaryTable& t, LawRecorder& rec) {
  const std::size_t n = t.size();
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = x + 1; y < n && !rec.done(); ++y) {
      if (t.at(x, y) != t.at(y, x)) rec.violation({x, y});
    }
  }
}

void scan_associativity(const PartialBinaryTable& t, LawRecorder& rec) {
  const std::size_t n = t.size();
  for (Element x = 0; x < n && !rec.done(); ++x) {
    for (Element y = 0; y < n && !rec.done(); ++y) {
      const auto xy = t.at(x, y);
      for (Element z = 0; z < n && !rec.done(); ++z) {
        const auto yz = t.at(y, z);
        const auto left = xy ? t.at(*xy, z) : std::nullopt;
        const auto right = yz ? t.at(x, *yz) : std::nullopt;
        if (left != right) {
          rec.violation({x, y, z}, left.has_value() != right.has_value()
                                       ? "one side defined, the other undefined"
                                       : "both sides defined with different values");
        }
      }
    }
  }
}

TableLaw table_is_commutative(const PartialBinaryTable& t) {
  LawRecorder rec("COMM", "commutativity", CheckOptions::fast());
  scan_commutativity(t, rec);
  LawRecord r = std::move(rec).finish();
  if (r.passed()) return {};
  return TableLaw{false, r.witnesses.front().elements};
}

TableLaw table_is_associative_partial(const PartialBinaryTable& t) {
  LawRecorder rec("ASSOC", "associativity", CheckOptions::fast());
  scan_associativity(t, rec);
  LawRecord r = std::move(rec).finish();
  if (r.passed()) return {};
  return TableLaw{false, r.witnesses.front().elements};
}

Structure permuted(const Structure& s, const std::vector<Element>& perm) {
  const std::size_t n = s.size;
  if (perm.size() != n) throw StructuralError("permutation has wrong length");
  Structure out;
  out.size = n;
  out.zero = perm[s.zero];
  out.one = perm[s.one];
  for (const auto& t : s.partial) {
    PartialBinaryTable p(n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (auto v = t.at(x, y)) p.set(perm[x], perm[y], perm[*v]);
      }
    }
    out.partial.push_back(std::move(p));
  }
  for (const auto& t : s.total) {
    TotalBinaryTable p(n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) p.set(perm[x], perm[y], perm[t.at(x, y)]);
    }
    out.total.push_back(std::move(p));
  }
  for (const auto& t : s.unary) {
    UnaryTable u(n);
    for (Element x = 0; x < n; ++x) u.set(perm[x], perm[t(x)]);
    out.unary.push_back(std::move(u));
  }
  return out;
}

std::vector<int> encode(const Structure& s) {
  const std::size_t n = s.size;
  std::vector<int> key;
  key.reserve(3 + n * n * (s.partial.size() + s.total.size()) + n * s.unary.size());
  key.push_back(static_cast<int>(n));
  key.push_back(static_cast<int>(s.zero));
  key.push_back(static_cast<int>(s.one));
  for (const auto& t : s.partial) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        auto v = t.at(x, y);
        key.push_back(v ? static_cast<int>(*v) : -1);
      }
    }
  }
  for (const auto& t : s.total) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) key.push_back(static_cast<int>(t.at(x, y)));
    }
  }
  for (const auto& t : s.unary) {
    for (Element x = 0; x < n; ++x) key.push_back(static_cast<int>(t(x)));
  }
  return key;
}

}  // namespace qrlab
