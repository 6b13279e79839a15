#include "qrlab/algebra.hpp"

#include <utility>

namespace qrlab {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

AlgebraKind kind_of(const AnyAlgebra& a) {
  return std::visit(overloaded{
                        [](const EffectAlgebra&) { return AlgebraKind::Effect; },
                        [](const PseudoeffectAlgebra&) { return AlgebraKind::Pseudoeffect; },
                        [](const CommQResLattice&) { return AlgebraKind::Cqrl; },
                        [](const QResLattice&) { return AlgebraKind::Qrl; },
                    },
                    a);
}

std::string_view kind_token(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Effect: return "effect";
    case AlgebraKind::Pseudoeffect: return "pseudoeffect";
    case AlgebraKind::Cqrl: return "cqrl";
    case AlgebraKind::Qrl: return "qrl";
  }
  return "";
}

std::optional<AlgebraKind> parse_kind_token(std::string_view token) {
  for (auto k : {AlgebraKind::Effect, AlgebraKind::Pseudoeffect, AlgebraKind::Cqrl,
                 AlgebraKind::Qrl}) {
    if (kind_token(k) == token) return k;
  }
  return std::nullopt;
}

const Carrier& carrier_of(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) -> const Carrier& { return alg.carrier; }, a);
}

Structure structure_of(const AnyAlgebra& a) {
  return std::visit(
      overloaded{
          [](const EffectAlgebra& e) {
            return Structure{e.size(), e.zero, e.one, {e.plus}, {}, {e.comp}};
          },
          [](const PseudoeffectAlgebra& p) {
            return Structure{p.size(), p.zero, p.one, {p.plus}, {}, {p.bar, p.tilde}};
          },
          [](const CommQResLattice& c) {
            return Structure{c.size(), c.zero, c.one, {c.odot},
                             {c.lattice.join, c.lattice.meet, c.arrow}, {}};
          },
          [](const QResLattice& q) {
            return Structure{q.size(), q.zero, q.one, {q.odot},
                             {q.lattice.join, q.lattice.meet, q.arrow, q.leadsto}, {}};
          },
      },
      a);
}

AnyAlgebra from_structure(AlgebraKind kind, const Structure& s, Carrier carrier) {
  auto need = [&](std::size_t partial, std::size_t total, std::size_t unary) {
    if (s.partial.size() != partial || s.total.size() != total || s.unary.size() != unary) {
      throw StructuralError("structure does not match the tables of its kind");
    }
  };
  switch (kind) {
    case AlgebraKind::Effect:
      need(1, 0, 1);
      return EffectAlgebra{std::move(carrier), s.partial[0], s.unary[0], s.zero, s.one};
    case AlgebraKind::Pseudoeffect:
      need(1, 0, 2);
      return PseudoeffectAlgebra{std::move(carrier), s.partial[0], s.unary[0], s.unary[1],
                                 s.zero, s.one};
    case AlgebraKind::Cqrl:
      need(1, 3, 0);
      return CommQResLattice{std::move(carrier),
                             lattice_from_operations(s.total[0], s.total[1], s.zero, s.one),
                             s.partial[0], s.total[2], s.zero, s.one};
    case AlgebraKind::Qrl:
      need(1, 4, 0);
      return QResLattice{std::move(carrier),
                         lattice_from_operations(s.total[0], s.total[1], s.zero, s.one),
                         s.partial[0],
                         s.total[2],
                         s.total[3],
                         s.zero,
                         s.one};
  }
  throw StructuralError("unknown algebra kind");
}

CheckReport check_axioms(const AnyAlgebra& a, const CheckOptions& options) {
  return std::visit(
      overloaded{
          [&](const EffectAlgebra& e) { return check_effect_axioms(e, options); },
          [&](const PseudoeffectAlgebra& p) { return check_pseudoeffect_axioms(p, options); },
          [&](const CommQResLattice& c) { return check_cqrl_axioms(c, options); },
          [&](const QResLattice& q) { return check_qrl_axioms(q, options); },
      },
      a);
}

}  // namespace qrlab
