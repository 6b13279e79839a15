// One line per acceptance criterion: "CRITERION <n> PASS|FAIL <detail>".
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "qrlab/catalog.hpp"
#include "qrlab/text_format.hpp"
#include "qrlab/transform.hpp"

using namespace qrlab;
using qrlab::testing::key_set;
using qrlab::testing::models_of;
using qrlab::testing::same_order;

namespace {

int failures = 0;

void verdict(int n, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << "CRITERION " << n << ' ' << (ok ? "PASS" : "FAIL") << ' ' << detail << std::endl;
}

std::string ids(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& id : v) s += (s.empty() ? "" : ",") + id;
  return s.empty() ? "-" : s;
}

// ---- 1 and 2 -------------------------------------------------------------

void lattice_effect_sweeps() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t models = 0;
  std::size_t c_bad = 0;
  std::size_t rt_bad = 0;
  std::string first_c;
  std::string first_rt;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& e : models_of<EffectAlgebra>(ModelKind::LatticeEffect, n)) {
      ++models;
      const auto le = std::get<LatticeEffectAlgebra>(detect_lattice_effect(e));
      bool ok = false;
      try {
        const CommQResLattice c = cqrl_of_effect(le);
        ok = check_cqrl_axioms(c).passed() && check_cqrl_divisibility(c).passed();
      } catch (const ConstructionDefect&) {
      }
      if (!ok && c_bad++ == 0) first_c = "size " + std::to_string(n);
      if (!roundtrip_effect(le).passed() && rt_bad++ == 0) first_rt = "size " + std::to_string(n);
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d1;
  d1 << models << " lattice effect algebras (sizes 2-5), " << c_bad << " failing C1-C3/CDIV"
     << (c_bad ? " first at " + first_c : "") << ", " << seconds << "s (limit 60s)";
  verdict(1, models > 0 && c_bad == 0 && seconds < 60.0, d1.str());
  std::ostringstream d2;
  d2 << models << " algebras, " << rt_bad << " not table-identical after E(C(E))"
     << (rt_bad ? " first at " + first_rt : "");
  verdict(2, models > 0 && rt_bad == 0, d2.str());
}

// ---- 3 -------------------------------------------------------------------

void cqrl_sweep() {
  std::size_t models = 0;
  std::size_t divisible = 0;
  std::size_t bad = 0;
  bool truncated = false;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto result = collect_models({ModelKind::Cqrl, n});
    truncated = truncated || result.summary.truncated;
    for (const auto& a : result.models) {
      const auto& c = std::get<CommQResLattice>(a);
      ++models;
      if (check_cqrl_divisibility(c).passed()) ++divisible;
      bool ok = false;
      try {
        const LatticeEffectAlgebra le = effect_of_cqrl(c);
        auto order = derive_induced_order(le.base);
        ok = check_effect_axioms(le.base).passed() && std::holds_alternative<BoundedPoset>(order) &&
             same_order(std::get<BoundedPoset>(order), c.lattice.order);
      } catch (const ConstructionDefect&) {
      }
      if (!ok) ++bad;
    }
  }
  std::ostringstream d;
  d << models << " CQRLs (sizes 2-4, " << (truncated ? "truncated" : "complete") << "), " << bad
    << " failing E1-E4 or order; divisible subset " << divisible << " of " << models;
  verdict(3, models > 0 && bad == 0, d.str());
}

// ---- 4 -------------------------------------------------------------------

void pseudoeffect_sweeps() {
  std::size_t gps = 0;
  std::size_t q_bad = 0;
  std::size_t rt_bad = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& p : models_of<PseudoeffectAlgebra>(ModelKind::GoodLatticePseudoeffect, n)) {
      ++gps;
      const auto gp = std::get<GoodLatticePseudoeffectAlgebra>(detect_good_lattice_pseudo(p));
      bool ok = false;
      try {
        const QResLattice q = qrl_of_pseudoeffect(gp);
        ok = check_qrl_axioms(q).passed() && check_qrl_divisibility(q).passed();
      } catch (const std::exception&) {
      }
      if (!ok) ++q_bad;
      if (!roundtrip_pseudoeffect(gp).passed()) ++rt_bad;
    }
  }
  std::size_t qrls = 0;
  std::size_t p_bad = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& q : models_of<QResLattice>(ModelKind::Qrl, n)) {
      ++qrls;
      bool ok = false;
      try {
        const GoodLatticePseudoeffectAlgebra gp = pseudoeffect_of_qrl(q);
        auto order = derive_induced_order_pseudo(gp.base);
        ok = check_pseudoeffect_axioms(gp.base).passed() &&
             std::holds_alternative<BoundedPoset>(order) &&
             check_goodness(gp.base, std::get<BoundedPoset>(order)).passed() &&
             same_order(std::get<BoundedPoset>(order), q.lattice.order);
      } catch (const std::exception&) {
      }
      if (!ok) ++p_bad;
    }
  }
  std::ostringstream d;
  d << gps << " good lattice pseudoeffect algebras (2-4): " << q_bad << " failing Q1-Q5/QDIV, "
    << rt_bad << " failing P(Q(P)) = P; " << qrls << " QRLs (2-3): " << p_bad
    << " failing P1-P4/goodness/order";
  verdict(4, gps > 0 && qrls > 0 && q_bad + rt_bad + p_bad == 0, d.str());
}

// ---- 5 -------------------------------------------------------------------

void lemma_suites() {
  std::size_t effects = 0;
  std::size_t e_bad = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& e : models_of<EffectAlgebra>(ModelKind::Effect, n)) {
      ++effects;
      auto order = derive_induced_order(e);
      if (!std::holds_alternative<BoundedPoset>(order) ||
          !check_effect_lemma_properties(e, std::get<BoundedPoset>(order)).passed()) {
        ++e_bad;
      }
    }
  }
  std::size_t pseudos = 0;
  std::size_t p_bad = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& p : models_of<PseudoeffectAlgebra>(ModelKind::GoodLatticePseudoeffect, n)) {
      ++pseudos;
      const auto gp = std::get<GoodLatticePseudoeffectAlgebra>(detect_good_lattice_pseudo(p));
      if (!check_pseudo_lemma_properties(gp).passed()) ++p_bad;
    }
  }
  std::ostringstream d;
  d << effects << " effect algebras (2-5): " << e_bad << " failing LEM-i..vii; " << pseudos
    << " good lattice pseudoeffect algebras (2-4): " << p_bad << " failing PLEM-i..ix";
  verdict(5, effects > 0 && pseudos > 0 && e_bad + p_bad == 0, d.str());
}

// ---- 6 -------------------------------------------------------------------

void oracle_anchor() {
  std::string mismatched;
  std::size_t effect2 = 0;
  std::size_t effect3 = 0;
  for (ModelKind k : kAllModelKinds) {
    for (std::size_t n = 2; n <= 3; ++n) {
      const auto pruned = collect_models({k, n}).models;
      const auto naive = naive_oracle(k, n);
      if (key_set(pruned) != key_set(naive) || pruned.size() != naive.size()) {
        mismatched += std::string(mismatched.empty() ? "" : ",") +
                      std::string(model_kind_token(k)) + "/" + std::to_string(n);
      }
      if (k == ModelKind::Effect) (n == 2 ? effect2 : effect3) = pruned.size();
    }
  }
  std::ostringstream d;
  d << "8 kinds x sizes 2-3, mismatches " << (mismatched.empty() ? "none" : mismatched)
    << "; effect models " << effect2 << " at size 2, " << effect3 << " at size 3";
  verdict(6, mismatched.empty() && effect2 == 1 && effect3 == 1, d.str());
}

// ---- 7 -------------------------------------------------------------------

// -DEF companions are reported under their law.
std::string law_family(const std::string& id) {
  const auto cut = id.find("-DEF");
  return cut == std::string::npos ? id : id.substr(0, cut);
}

struct Rejection {
  std::set<std::string> axioms;
  std::set<std::string> refinement;
};

Rejection evaluate(const AnyAlgebra& a) {
  Rejection r;
  for (const auto& id : check_axioms(a).failing_ids()) r.axioms.insert(law_family(id));
  CheckReport extra;
  if (const auto* p = std::get_if<PseudoeffectAlgebra>(&a)) {
    auto order = derive_induced_order_pseudo(*p);
    if (const auto* po = std::get_if<BoundedPoset>(&order)) extra = check_goodness(*p, *po);
  } else if (const auto* c = std::get_if<CommQResLattice>(&a)) {
    extra = check_cqrl_divisibility(*c);
  } else if (const auto* q = std::get_if<QResLattice>(&a)) {
    extra = check_qrl_divisibility(*q);
  }
  for (const auto& id : extra.failing_ids()) r.refinement.insert(law_family(id));
  return r;
}

// Every single-cell change of the non-lattice tables.
template <class F>
void for_each_mutant(const AnyAlgebra& a, F&& f) {
  const Structure s = structure_of(a);
  const std::size_t n = s.size;
  const Carrier& carrier = carrier_of(a);
  const AlgebraKind kind = kind_of(a);
  auto emit = [&](const Structure& m) {
    try {
      f(from_structure(kind, m, carrier));
    } catch (const StructuralError&) {
    }
  };
  for (std::size_t t = 0; t < s.partial.size(); ++t) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (std::size_t v = 0; v <= n; ++v) {
          const auto value = v == n ? std::nullopt : std::optional<Element>(v);
          if (value == s.partial[t].at(x, y)) continue;
          Structure m = s;
          m.partial[t].set(x, y, value);
          emit(m);
        }
      }
    }
  }
  // total[0..1] are join and meet.
  const std::size_t first_total = s.total.empty() ? 0 : 2;
  for (std::size_t t = first_total; t < s.total.size(); ++t) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element v = 0; v < n; ++v) {
          if (v == s.total[t].at(x, y)) continue;
          Structure m = s;
          m.total[t].set(x, y, v);
          emit(m);
        }
      }
    }
  }
  for (std::size_t t = 0; t < s.unary.size(); ++t) {
    for (Element x = 0; x < n; ++x) {
      for (Element v = 0; v < n; ++v) {
        if (v == s.unary[t](x)) continue;
        Structure m = s;
        m.unary[t].set(x, v);
        emit(m);
      }
    }
  }
}

// Laws a single-cell change breaking the key law cannot avoid breaking too.
//  E1, P1  a changed sum cell s = x+y meets the complement of s: the triple
//          (x, y, complement) breaks associativity unless s = 1, where the
//          complement law breaks.
//  C2      prime is arrow(-, 0); moving prime(x) moves the definedness
//          condition of row x of odot in C1.
//  Q2      bar and tilde are read by Q1 (definedness), Q3, Q4 and Q5.
//  Q5      with the lattice and both implications fixed, odot is pinned by Q1
//          (definedness) and Q3/Q4 (values); bar and tilde by Q2.
const std::map<std::string, std::set<std::string>> kForced = {
    {"E1", {"E2", "E3"}},
    {"P1", {"P2", "P3"}},
    {"C2", {"C1"}},
    {"Q2", {"Q1", "Q3", "Q4", "Q5"}},
    {"Q5", {"Q1", "Q2", "Q3", "Q4"}},
};

struct LawHit {
  bool found = false;
  bool isolated = false;
  std::string where;
  std::set<std::string> also;
};

void record(LawHit& h, bool isolated, const std::string& where, std::set<std::string> also) {
  if (h.isolated) return;
  if (h.found && (!isolated && also.size() >= h.also.size())) return;
  h = LawHit{true, isolated, where, std::move(also)};
}

void mutation_sensitivity() {
  const std::vector<std::string> axioms = {"E1", "E2", "E3", "E4", "P1", "P2", "P3", "P4",
                                           "C1", "C2", "C3", "Q1", "Q2", "Q3", "Q4", "Q5"};
  const std::vector<std::string> refinements = {"CDIV", "QDIV", "GOOD"};
  std::map<std::string, LawHit> hits;
  std::size_t mutants = 0;
  for (const auto& entry : catalog()) {
    for_each_mutant(entry.algebra, [&](const AnyAlgebra& m) {
      ++mutants;
      const Rejection r = evaluate(m);
      // Axiom report: the law plus, at most, laws it forces.
      for (const auto& law : r.axioms) {
        std::set<std::string> also = r.axioms;
        also.erase(law);
        const auto forced = kForced.find(law);
        bool ok = true;
        for (const auto& other : also) {
          ok = ok && forced != kForced.end() && forced->second.count(other) == 1;
        }
        const bool alone = also.empty();
        if (ok) record(hits[law], alone, entry.name, std::move(also));
      }
      // Refinement report: exactly that law; base axiom failures are listed.
      if (r.refinement.size() == 1) {
        record(hits[*r.refinement.begin()], r.axioms.empty(), entry.name, r.axioms);
      }
    });
  }
  bool ok = true;
  std::size_t isolated = 0;
  std::ostringstream d;
  for (const auto& law : axioms) ok = ok && hits[law].found;
  for (const auto& law : refinements) ok = ok && hits[law].found;
  std::ostringstream laws;
  auto describe = [&](const std::string& law, const char* with) {
    const LawHit& h = hits[law];
    if (h.isolated) ++isolated;
    std::vector<std::string> also(h.also.begin(), h.also.end());
    laws << ' ' << law << '='
         << (!h.found     ? std::string("none")
             : h.isolated ? "isolated(" + h.where + ")"
                          : std::string(with) + "(" + h.where + ":" + ids(also) + ")");
  };
  for (const auto& law : axioms) describe(law, "forced");
  for (const auto& law : refinements) describe(law, "with");
  d << mutants << " mutants, " << isolated << " of " << axioms.size() + refinements.size()
    << " laws isolated;" << laws.str();
  verdict(7, ok, d.str());
}

// ---- 8 -------------------------------------------------------------------

struct Run {
  int code;
  std::string out;
  std::string err;
  bool operator==(const Run&) const = default;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

void cli_determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "qrlab_acceptance";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& body) {
    const auto path = dir / name;
    std::ofstream(path, std::ios::binary) << body;
    return path.string();
  };
  const std::string mv3 = write("mv3.alg", serialize_algebra(find_catalog_entry("mv3")->algebra));
  auto broken = std::get<EffectAlgebra>(find_catalog_entry("boolean2")->algebra);
  broken.plus.set(1, 1, 1);
  const std::string bad = write("broken.alg", serialize_algebra(broken));

  struct Case {
    std::vector<std::string> args;
    int expected;
  };
  const std::vector<Case> cases = {
      {{"check", mv3}, cli::kExitPass},
      {{"check", mv3, "--lemmas", "--format", "machine"}, cli::kExitPass},
      {{"check", bad, "--format", "machine"}, cli::kExitViolations},
      {{"roundtrip", mv3}, cli::kExitPass},
      {{"enumerate", "--kind", "effect", "--size", "3"}, cli::kExitPass},
      {{"enumerate", "--kind", "cqrl", "--size", "3", "--up-to-iso"}, cli::kExitPass},
      {{"catalog"}, cli::kExitPass},
      {{"catalog", "diamond-qrl"}, cli::kExitPass},
      {{"catalog", "nonesuch"}, cli::kExitError},
  };
  std::size_t bad_cases = 0;
  std::string first;
  for (const auto& c : cases) {
    const Run a = run(c.args);
    const Run b = run(c.args);
    if (!(a == b) || a.code != c.expected) {
      if (bad_cases++ == 0) first = c.args.front() + " exit " + std::to_string(a.code);
    }
  }
  std::ostringstream d;
  d << cases.size() << " invocations run twice, " << bad_cases
    << " differing or with an unexpected exit code" << (bad_cases ? " first: " + first : "");
  verdict(8, bad_cases == 0, d.str());
}

}  // namespace

int main() {
  lattice_effect_sweeps();
  cqrl_sweep();
  pseudoeffect_sweeps();
  lemma_suites();
  oracle_anchor();
  mutation_sensitivity();
  cli_determinism();
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILING") << std::endl;
  return failures == 0 ? 0 : 1;
}
