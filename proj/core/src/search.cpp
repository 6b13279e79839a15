// Pruned model search.
//
// Every kind fixes zero = 0 and one = n-1. Table cells are filled in a fixed
// row-major order with the domain {undefined, 0, ..., n-1} (minus values a law
// rules out directly). After each assignment every triple whose cells are all
// decided is tested for associativity with two-sided definedness.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "qrlab/enumerate.hpp"

namespace qrlab {

namespace {

constexpr int kUnset = -2;
constexpr int kUndef = -1;

class Grid {
 public:
  explicit Grid(int n) : n_(n), cells_(static_cast<std::size_t>(n * n), kUnset) {}
  int n() const { return n_; }
  int operator()(int x, int y) const { return cells_[static_cast<std::size_t>(x * n_ + y)]; }
  void put(int x, int y, int v) { cells_[static_cast<std::size_t>(x * n_ + y)] = v; }

  PartialBinaryTable to_table() const {
    PartialBinaryTable t(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        const int v = (*this)(x, y);
        if (v >= 0) t.set(static_cast<Element>(x), static_cast<Element>(y), static_cast<Element>(v));
      }
    }
    return t;
  }

 private:
  int n_;
  std::vector<int> cells_;
};

bool triple_consistent(const Grid& g, int x, int y, int z) {
  const int a = g(x, y);
  if (a == kUnset) return true;
  const int left = a == kUndef ? kUndef : g(a, z);
  if (left == kUnset) return true;
  const int b = g(y, z);
  if (b == kUnset) return true;
  const int right = b == kUndef ? kUndef : g(x, b);
  if (right == kUnset) return true;
  return left == right;
}

bool associativity_consistent(const Grid& g) {
  const int n = g.n();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g(x, y) == kUnset) continue;
      for (int z = 0; z < n; ++z) {
        if (!triple_consistent(g, x, y, z)) return false;
      }
    }
  }
  return true;
}

using Cell = std::pair<int, int>;

// Depth-first fill of the free cells. leaf(grid) returns false to stop.
template <class Leaf>
bool fill_cells(Grid& g, const std::vector<Cell>& free, std::size_t index,
                const std::vector<int>& domain, bool mirror, Leaf& leaf) {
  if (index == free.size()) return leaf(g);
  const auto [x, y] = free[index];
  for (int v : domain) {
    g.put(x, y, v);
    if (mirror) g.put(y, x, v);
    if (associativity_consistent(g) && !fill_cells(g, free, index + 1, domain, mirror, leaf)) {
      g.put(x, y, kUnset);
      if (mirror) g.put(y, x, kUnset);
      return false;
    }
  }
  g.put(x, y, kUnset);
  if (mirror) g.put(y, x, kUnset);
  return true;
}

// Calls f(map) for each involution of {0..n-1} fixing nothing in particular.
template <class F>
bool for_each_involution(std::vector<int>& map, F& f) {
  const auto it = std::find(map.begin(), map.end(), kUnset);
  if (it == map.end()) return f(map);
  const int i = static_cast<int>(it - map.begin());
  map[i] = i;
  if (!for_each_involution(map, f)) return false;
  for (int j = i + 1; j < static_cast<int>(map.size()); ++j) {
    if (map[j] != kUnset) continue;
    map[i] = j;
    map[j] = i;
    if (!for_each_involution(map, f)) return false;
    map[j] = kUnset;
  }
  map[i] = kUnset;
  return true;
}

// Filters, counts, deduplicates and forwards models to the caller's sink.
class Emitter {
 public:
  Emitter(const EnumerationTask& task, const ModelSink& sink) : task_(task), sink_(sink) {}

  bool offer(const AnyAlgebra& a) {
    if (!satisfies_refinement(task_.kind, a)) return true;
    std::vector<int> key = canonical_key(a);
    const bool fresh = !seen_.contains(key);
    const bool emit = !task_.up_to_iso || fresh;
    if (emit && task_.limit && summary_.emitted >= *task_.limit) {
      summary_.truncated = true;
      return false;
    }
    ++summary_.raw_count;
    if (fresh) {
      seen_.insert(std::move(key));
      ++summary_.iso_classes;
    }
    if (emit) {
      ++summary_.emitted;
      if (sink_) sink_(a);
    }
    return true;
  }

  const EnumerationSummary& summary() const { return summary_; }

 private:
  const EnumerationTask& task_;
  const ModelSink& sink_;
  std::set<std::vector<int>> seen_;
  EnumerationSummary summary_;
};

std::vector<int> interior_values_and_undef(int n, bool allow_one) {
  std::vector<int> d{kUndef};
  for (int v = 0; v < n; ++v) {
    if (v == n - 1 && !allow_one) continue;
    d.push_back(v);
  }
  return d;
}

// Cells of a partial algebra with a neutral zero and an absorbing-undefined
// one: 0+x = x+0 = x, 1+x and x+1 undefined for x != 0.
Grid sum_grid_skeleton(int n) {
  Grid g(n);
  const int one = n - 1;
  for (int x = 0; x < n; ++x) {
    g.put(0, x, x);
    g.put(x, 0, x);
  }
  for (int x = 1; x < n; ++x) {
    g.put(one, x, kUndef);
    g.put(x, one, kUndef);
  }
  return g;
}

bool search_effect(int n, Emitter& out) {
  const int one = n - 1;
  std::vector<int> comp(static_cast<std::size_t>(n), kUnset);
  comp[0] = one;
  comp[static_cast<std::size_t>(one)] = 0;
  const std::vector<int> domain = interior_values_and_undef(n, false);

  auto with_comp = [&](std::vector<int>& c) {
    Grid g = sum_grid_skeleton(n);
    std::vector<Cell> free;
    for (int x = 1; x < one; ++x) {
      g.put(x, c[x], one);
      g.put(c[x], x, one);
    }
    for (int x = 1; x < one; ++x) {
      for (int y = x; y < one; ++y) {
        if (g(x, y) == kUnset) free.emplace_back(x, y);
      }
    }
    if (!associativity_consistent(g)) return true;
    std::vector<Element> cm(c.begin(), c.end());
    auto leaf = [&](const Grid& full) {
      const auto sz = static_cast<std::size_t>(n);
      return out.offer(EffectAlgebra{Carrier::with_default_labels(sz), full.to_table(),
                                     UnaryTable(cm, sz), 0, sz - 1});
    };
    return fill_cells(g, free, 0, domain, true, leaf);
  };
  return for_each_involution(comp, with_comp);
}

bool pseudo_p1_holds(const Grid& g) {
  const int n = g.n();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int s = g(x, y);
      if (s < 0) continue;
      bool left = false;
      bool right = false;
      for (int t = 0; t < n; ++t) {
        left = left || g(t, x) == s;
        right = right || g(y, t) == s;
      }
      if (!left || !right) return false;
    }
  }
  return true;
}

bool search_pseudoeffect(int n, Emitter& out) {
  const int one = n - 1;
  std::vector<int> interior(static_cast<std::size_t>(std::max(0, n - 2)));
  std::iota(interior.begin(), interior.end(), 1);
  const std::vector<int> domain = interior_values_and_undef(n, false);
  do {
    // bar(interior[i - 1]) for the i-th interior element
    std::vector<int> bar(static_cast<std::size_t>(n));
    bar[0] = one;
    bar[static_cast<std::size_t>(one)] = 0;
    for (int i = 1; i < one; ++i) bar[i] = interior[static_cast<std::size_t>(i - 1)];
    std::vector<int> tilde(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) tilde[bar[x]] = x;

    Grid g = sum_grid_skeleton(n);
    for (int y = 1; y < one; ++y) g.put(bar[y], y, one);
    std::vector<Cell> free;
    for (int x = 1; x < one; ++x) {
      for (int y = 1; y < one; ++y) {
        if (g(x, y) == kUnset) free.emplace_back(x, y);
      }
    }
    if (!associativity_consistent(g)) continue;
    const auto sz = static_cast<std::size_t>(n);
    UnaryTable bar_t(std::vector<Element>(bar.begin(), bar.end()), sz);
    UnaryTable tilde_t(std::vector<Element>(tilde.begin(), tilde.end()), sz);
    auto leaf = [&](const Grid& full) {
      if (!pseudo_p1_holds(full)) return true;
      return out.offer(PseudoeffectAlgebra{Carrier::with_default_labels(sz), full.to_table(),
                                           bar_t, tilde_t, 0, sz - 1});
    };
    if (!fill_cells(g, free, 0, domain, false, leaf)) return false;
  } while (std::next_permutation(interior.begin(), interior.end()));
  return true;
}

struct LatticeView {
  const LatticeTables& l;
  bool leq(int x, int y) const { return l.order.leq(static_cast<Element>(x), static_cast<Element>(y)); }
  int join(int x, int y) const { return static_cast<int>(l.join.at(static_cast<Element>(x), static_cast<Element>(y))); }
  int meet(int x, int y) const { return static_cast<int>(l.meet.at(static_cast<Element>(x), static_cast<Element>(y))); }
};

bool antitone(const LatticeView& lat, const std::vector<int>& f) {
  const int n = static_cast<int>(f.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (lat.leq(x, y) && !lat.leq(f[y], f[x])) return false;
    }
  }
  return true;
}

// Set up the odot grid: undefined outside the domain rule, unit row/column of
// one, remaining defined cells free. Returns false if the unit cells contradict
// the rule.
template <class Rule>
bool odot_skeleton(int n, Rule defined_when, bool commutative, Grid& g, std::vector<Cell>& free) {
  const int one = n - 1;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!defined_when(x, y)) g.put(x, y, kUndef);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (g(x, one) == kUndef || g(one, x) == kUndef) return false;
    g.put(x, one, x);
    g.put(one, x, x);
  }
  for (int x = 0; x < one; ++x) {
    for (int y = commutative ? x : 0; y < one; ++y) {
      if (g(x, y) == kUnset) free.emplace_back(x, y);
    }
  }
  return associativity_consistent(g);
}

// Candidate values per cell of an implication table; law(y, z, w) decides one
// cell. The z = 0 column is pinned to pinned[y]. Returns empty if some cell has
// no candidate.
template <class Law>
std::vector<std::vector<int>> implication_candidates(int n, const std::vector<int>& pinned,
                                                     Law law) {
  std::vector<std::vector<int>> cands(static_cast<std::size_t>(n * n));
  for (int y = 0; y < n; ++y) {
    for (int z = 0; z < n; ++z) {
      auto& c = cands[static_cast<std::size_t>(y * n + z)];
      for (int w = 0; w < n; ++w) {
        if (z == 0 && w != pinned[y]) continue;
        if (law(y, z, w)) c.push_back(w);
      }
      if (c.empty()) return {};
    }
  }
  return cands;
}

// Odometer over candidate lists; f(choice) returns false to stop.
template <class F>
bool for_each_choice(const std::vector<std::vector<int>>& cands, F&& f) {
  std::vector<std::size_t> idx(cands.size(), 0);
  std::vector<int> choice(cands.size());
  while (true) {
    for (std::size_t i = 0; i < cands.size(); ++i) choice[i] = cands[i][idx[i]];
    if (!f(choice)) return false;
    std::size_t i = cands.size();
    while (i > 0) {
      --i;
      if (++idx[i] < cands[i].size()) break;
      idx[i] = 0;
      if (i == 0) return true;
    }
    if (cands.empty()) return true;
  }
}

TotalBinaryTable to_total(int n, const std::vector<int>& cells) {
  TotalBinaryTable t(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t.set(static_cast<Element>(x), static_cast<Element>(y),
            static_cast<Element>(cells[static_cast<std::size_t>(x * n + y)]));
    }
  }
  return t;
}

bool search_cqrl(int n, Emitter& out) {
  const auto sz = static_cast<std::size_t>(n);
  const std::vector<int> domain = [&] {
    std::vector<int> d(sz);
    std::iota(d.begin(), d.end(), 0);
    return d;
  }();
  for (const LatticeTables& tables : enumerate_bounded_lattices(sz)) {
    const LatticeView lat{tables};
    std::vector<int> prime(sz, kUnset);
    auto with_prime = [&](std::vector<int>& p) {
      if (!antitone(lat, p)) return true;
      Grid g(n);
      std::vector<Cell> free;
      if (!odot_skeleton(n, [&](int x, int y) { return lat.leq(p[x], y); }, true, g, free)) {
        return true;
      }
      auto leaf = [&](const Grid& full) {
        bool defect = false;
        auto c3 = [&](int y, int z, int w) {
          for (int x = 0; x < n; ++x) {
            const int lhs = lat.join(x, p[y]);
            const int prod = full(lhs, y);
            if (prod < 0) {
              defect = true;
              return false;
            }
            if (lat.leq(prod, lat.meet(y, z)) != lat.leq(lhs, w)) return false;
          }
          return true;
        };
        const auto cands = implication_candidates(n, p, c3);
        if (cands.empty() || defect) return true;
        const PartialBinaryTable odot = full.to_table();
        return for_each_choice(cands, [&](const std::vector<int>& arrow) {
          return out.offer(CommQResLattice{Carrier::with_default_labels(sz), tables, odot,
                                           to_total(n, arrow), 0, sz - 1});
        });
      };
      return fill_cells(g, free, 0, domain, true, leaf);
    };
    if (!for_each_involution(prime, with_prime)) return false;
  }
  return true;
}

bool search_qrl(int n, Emitter& out) {
  const auto sz = static_cast<std::size_t>(n);
  std::vector<int> domain(sz);
  std::iota(domain.begin(), domain.end(), 0);
  for (const LatticeTables& tables : enumerate_bounded_lattices(sz)) {
    const LatticeView lat{tables};
    std::vector<int> bar(sz);
    std::iota(bar.begin(), bar.end(), 0);
    do {
      std::vector<int> tilde(sz);
      for (int x = 0; x < n; ++x) tilde[bar[x]] = x;
      if (!antitone(lat, bar) || !antitone(lat, tilde)) continue;
      Grid g(n);
      std::vector<Cell> free;
      if (!odot_skeleton(n, [&](int x, int y) { return lat.leq(tilde[x], y); }, false, g, free)) {
        continue;
      }
      auto leaf = [&](const Grid& full) {
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) {
            const int l = full(bar[x], bar[y]);
            const int r = full(tilde[x], tilde[y]);
            if ((l < 0) != (r < 0)) return true;
            if (l >= 0 && tilde[l] != bar[r]) return true;
          }
        }
        bool defect = false;
        auto q3 = [&](int y, int z, int w) {
          for (int x = 0; x < n; ++x) {
            const int lhs = lat.join(x, bar[y]);
            const int prod = full(lhs, y);
            if (prod < 0) {
              defect = true;
              return false;
            }
            if (lat.leq(prod, lat.meet(y, z)) != lat.leq(lhs, w)) return false;
          }
          return true;
        };
        auto q4 = [&](int y, int z, int w) {
          for (int x = 0; x < n; ++x) {
            const int rhs = lat.join(x, tilde[y]);
            const int prod = full(y, rhs);
            if (prod < 0) {
              defect = true;
              return false;
            }
            if (lat.leq(prod, lat.meet(y, z)) != lat.leq(rhs, w)) return false;
          }
          return true;
        };
        const auto arrows = implication_candidates(n, bar, q3);
        if (arrows.empty() || defect) return true;
        const auto leads = implication_candidates(n, tilde, q4);
        if (leads.empty() || defect) return true;
        const PartialBinaryTable odot = full.to_table();
        return for_each_choice(arrows, [&](const std::vector<int>& arrow) {
          const TotalBinaryTable arrow_t = to_total(n, arrow);
          return for_each_choice(leads, [&](const std::vector<int>& leadsto) {
            return out.offer(QResLattice{Carrier::with_default_labels(sz), tables, odot, arrow_t,
                                         to_total(n, leadsto), 0, sz - 1});
          });
        });
      };
      if (!fill_cells(g, free, 0, domain, false, leaf)) return false;
    } while (std::next_permutation(bar.begin(), bar.end()));
  }
  return true;
}

}  // namespace

std::string_view model_kind_token(ModelKind kind) {
  switch (kind) {
    case ModelKind::Effect: return "effect";
    case ModelKind::LatticeEffect: return "lattice-effect";
    case ModelKind::Pseudoeffect: return "pseudoeffect";
    case ModelKind::GoodLatticePseudoeffect: return "good-lattice-pseudoeffect";
    case ModelKind::Cqrl: return "cqrl";
    case ModelKind::CqrlDivisible: return "cqrl-divisible";
    case ModelKind::Qrl: return "qrl";
    case ModelKind::QrlDivisible: return "qrl-divisible";
  }
  return "";
}

std::optional<ModelKind> parse_model_kind(std::string_view token) {
  for (ModelKind k : kAllModelKinds) {
    if (model_kind_token(k) == token) return k;
  }
  return std::nullopt;
}

AlgebraKind base_kind(ModelKind kind) {
  switch (kind) {
    case ModelKind::Effect:
    case ModelKind::LatticeEffect: return AlgebraKind::Effect;
    case ModelKind::Pseudoeffect:
    case ModelKind::GoodLatticePseudoeffect: return AlgebraKind::Pseudoeffect;
    case ModelKind::Cqrl:
    case ModelKind::CqrlDivisible: return AlgebraKind::Cqrl;
    case ModelKind::Qrl:
    case ModelKind::QrlDivisible: return AlgebraKind::Qrl;
  }
  return AlgebraKind::Effect;
}

std::pair<std::size_t, std::size_t> supported_window(ModelKind kind) {
  switch (base_kind(kind)) {
    case AlgebraKind::Effect:
    case AlgebraKind::Pseudoeffect: return {2, 6};
    case AlgebraKind::Cqrl:
    case AlgebraKind::Qrl: return {2, 4};
  }
  return {2, 2};
}

bool satisfies_refinement(ModelKind kind, const AnyAlgebra& a) {
  switch (kind) {
    case ModelKind::LatticeEffect:
      return std::holds_alternative<LatticeEffectAlgebra>(
          detect_lattice_effect(std::get<EffectAlgebra>(a)));
    case ModelKind::GoodLatticePseudoeffect:
      return std::holds_alternative<GoodLatticePseudoeffectAlgebra>(
          detect_good_lattice_pseudo(std::get<PseudoeffectAlgebra>(a)));
    case ModelKind::CqrlDivisible:
      return check_cqrl_divisibility(std::get<CommQResLattice>(a), CheckOptions::fast()).passed();
    case ModelKind::QrlDivisible:
      return check_qrl_divisibility(std::get<QResLattice>(a), CheckOptions::fast()).passed();
    default:
      return true;
  }
}

std::vector<LatticeTables> enumerate_bounded_lattices(std::size_t n) {
  std::vector<LatticeTables> out;
  if (n < 2) return out;
  const Element top = n - 1;
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 1; i < top; ++i) {
    for (Element j = i + 1; j < top; ++j) pairs.emplace_back(i, j);
  }
  // 0: incomparable, 1: i < j, 2: j < i
  std::vector<int> state(pairs.size(), 0);
  while (true) {
    Relation rel(n);
    for (Element x = 0; x < n; ++x) {
      rel.set(x, x, true);
      rel.set(0, x, true);
      rel.set(x, top, true);
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (state[k] == 1) rel.set(pairs[k].first, pairs[k].second, true);
      if (state[k] == 2) rel.set(pairs[k].second, pairs[k].first, true);
    }
    auto poset = validate_poset(rel, 0, top);
    if (auto* p = std::get_if<BoundedPoset>(&poset)) {
      auto lat = lattice_from_poset(*p);
      if (auto* l = std::get_if<LatticeTables>(&lat)) out.push_back(std::move(*l));
    }
    std::size_t k = 0;
    while (k < state.size() && ++state[k] == 3) state[k++] = 0;
    if (k == state.size()) break;
  }
  return out;
}

EnumerationSummary enumerate_models(const EnumerationTask& task, const ModelSink& sink) {
  const auto [lo, hi] = supported_window(task.kind);
  if (task.size < lo || task.size > hi) {
    throw EnumerationError("size " + std::to_string(task.size) + " outside the window " +
                           std::to_string(lo) + ".." + std::to_string(hi) + " for kind " +
                           std::string(model_kind_token(task.kind)));
  }
  Emitter out(task, sink);
  const int n = static_cast<int>(task.size);
  switch (base_kind(task.kind)) {
    case AlgebraKind::Effect: search_effect(n, out); break;
    case AlgebraKind::Pseudoeffect: search_pseudoeffect(n, out); break;
    case AlgebraKind::Cqrl: search_cqrl(n, out); break;
    case AlgebraKind::Qrl: search_qrl(n, out); break;
  }
  return out.summary();
}

EnumerationResult collect_models(const EnumerationTask& task) {
  EnumerationResult result;
  result.summary = enumerate_models(task, [&](const AnyAlgebra& a) { result.models.push_back(a); });
  return result;
}

}  // namespace qrlab
