#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qrlab/catalog.hpp"
#include "qrlab/enumerate.hpp"
#include "qrlab/text_format.hpp"
#include "qrlab/transform.hpp"

namespace qrlab::cli {

namespace {

// Usage and structural problems; carries exit code 2.
struct UsageError {
  std::string message;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  ReportFormat format = ReportFormat::Text;
};

AnyAlgebra load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot open " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  auto parsed = parse_algebra(buf.str());
  if (auto* diags = std::get_if<std::vector<ParseDiagnostic>>(&parsed)) {
    std::string msg;
    for (const auto& d : *diags) msg += (msg.empty() ? "" : "\n") + path + ": " + to_string(d);
    throw UsageError{msg};
  }
  return std::get<AnyAlgebra>(std::move(parsed));
}

int verdict(const CheckReport& r) { return r.passed() ? kExitPass : kExitViolations; }

void print(Context& ctx, const CheckReport& r, const Carrier& c) {
  ctx.out << render_report(r, c, ctx.format);
}

// --- check ---------------------------------------------------------------

int cmd_check(Context& ctx, const std::string& path, bool lemmas, bool divisibility) {
  const AnyAlgebra a = load(path);
  const Carrier& c = carrier_of(a);
  const AlgebraKind kind = kind_of(a);
  if (divisibility && kind != AlgebraKind::Cqrl && kind != AlgebraKind::Qrl) {
    throw UsageError{"--divisibility applies to cqrl and qrl files"};
  }
  CheckReport report = check_axioms(a);
  const bool axioms_ok = report.passed();
  if (lemmas) {
    if (!axioms_ok) {
      ctx.err << "lemma checks skipped: the axioms fail\n";
    } else if (const auto* e = std::get_if<EffectAlgebra>(&a)) {
      auto order = derive_induced_order(*e);
      if (auto* p = std::get_if<BoundedPoset>(&order)) {
        report.append(check_effect_lemma_properties(*e, *p));
      } else {
        report.append(std::get<CheckReport>(order));
      }
    } else if (const auto* p = std::get_if<PseudoeffectAlgebra>(&a)) {
      auto order = derive_induced_order_pseudo(*p);
      if (auto* o = std::get_if<BoundedPoset>(&order)) {
        report.append(check_goodness(*p, *o));
        report.append(check_pseudo_lemma_properties(*p, *o));
      } else {
        report.append(std::get<CheckReport>(order));
      }
    } else if (const auto* q = std::get_if<CommQResLattice>(&a)) {
      report.append(check_otimes_equivalences(*q, false));
    } else {
      ctx.err << "no additional property suite for qrl files\n";
    }
  }
  if (divisibility) {
    if (!axioms_ok) {
      ctx.err << "divisibility skipped: the axioms fail\n";
    } else if (const auto* q = std::get_if<CommQResLattice>(&a)) {
      report.append(check_cqrl_divisibility(*q));
    } else {
      report.append(check_qrl_divisibility(std::get<QResLattice>(a)));
    }
  }
  print(ctx, report, c);
  return verdict(report);
}

// --- order ---------------------------------------------------------------

void print_order(Context& ctx, const BoundedPoset& order, const Carrier& c) {
  for (Element x = 0; x < c.size(); ++x) {
    ctx.out << c.label(x) << " <=";
    for (Element y = 0; y < c.size(); ++y) {
      if (order.leq(x, y)) ctx.out << ' ' << c.label(y);
    }
    ctx.out << '\n';
  }
}

int cmd_order(Context& ctx, const std::string& path) {
  const AnyAlgebra a = load(path);
  const Carrier& c = carrier_of(a);
  std::variant<BoundedPoset, CheckReport> order = CheckReport{};
  if (const auto* e = std::get_if<EffectAlgebra>(&a)) {
    order = derive_induced_order(*e);
  } else if (const auto* p = std::get_if<PseudoeffectAlgebra>(&a)) {
    order = derive_induced_order_pseudo(*p);
  } else {
    const LatticeTables& lat = std::holds_alternative<CommQResLattice>(a)
                                   ? std::get<CommQResLattice>(a).lattice
                                   : std::get<QResLattice>(a).lattice;
    LawRecord rec = check_lattice_tables(lat);
    if (!rec.passed()) {
      CheckReport r;
      r.add(std::move(rec));
      order = std::move(r);
    } else {
      order = lat.order;
    }
  }
  if (auto* r = std::get_if<CheckReport>(&order)) {
    ctx.out << "order: not a bounded poset\n";
    print(ctx, *r, c);
    return kExitViolations;
  }
  const BoundedPoset& p = std::get<BoundedPoset>(order);
  ctx.out << "order of " << kind_token(kind_of(a)) << " on " << c.size() << " elements\n";
  print_order(ctx, p, c);
  auto lat = lattice_from_poset(p);
  if (auto* bad = std::get_if<NotALattice>(&lat)) {
    ctx.out << "lattice no: " << c.label(bad->x) << ' ' << c.label(bad->y) << " have no unique "
            << bad->missing << '\n';
  } else {
    ctx.out << "lattice yes\n";
  }
  return kExitPass;
}

// --- transform -----------------------------------------------------------

int reject_input(Context& ctx, const CheckReport& r, const Carrier& c, const char* why) {
  ctx.err << why << '\n';
  ctx.err << render_report(r, c, ctx.format);
  return kExitViolations;
}

int cmd_transform(Context& ctx, const std::string& target, const std::string& path) {
  const AnyAlgebra a = load(path);
  const Carrier& c = carrier_of(a);
  const AlgebraKind want_from = target == "cqrl"     ? AlgebraKind::Effect
                                : target == "effect" ? AlgebraKind::Cqrl
                                : target == "qrl"    ? AlgebraKind::Pseudoeffect
                                                     : AlgebraKind::Qrl;
  if (kind_of(a) != want_from) {
    throw UsageError{"--to " + target + " needs a " + std::string(kind_token(want_from)) +
                     " file, got " + std::string(kind_token(kind_of(a)))};
  }
  CheckReport axioms = check_axioms(a);
  if (!axioms.passed()) return reject_input(ctx, axioms, c, "input fails its axioms");
  try {
    if (target == "cqrl") {
      auto le = detect_lattice_effect(std::get<EffectAlgebra>(a));
      if (auto* bad = std::get_if<NotALattice>(&le)) {
        ctx.err << "induced order is not a lattice: " << c.label(bad->x) << ' ' << c.label(bad->y)
                << " have no unique " << bad->missing << '\n';
        return kExitViolations;
      }
      ctx.out << serialize_algebra(cqrl_of_effect(std::get<LatticeEffectAlgebra>(le)));
    } else if (target == "effect") {
      ctx.out << serialize_algebra(effect_of_cqrl(std::get<CommQResLattice>(a)).base);
    } else if (target == "qrl") {
      auto gp = detect_good_lattice_pseudo(std::get<PseudoeffectAlgebra>(a));
      if (auto* r = std::get_if<CheckReport>(&gp)) {
        return reject_input(ctx, *r, c, "input is not a good lattice pseudoeffect algebra");
      }
      ctx.out << serialize_algebra(
          qrl_of_pseudoeffect(std::get<GoodLatticePseudoeffectAlgebra>(gp)));
    } else {
      ctx.out << serialize_algebra(pseudoeffect_of_qrl(std::get<QResLattice>(a)).base);
    }
  } catch (const ConstructionDefect& d) {
    ctx.err << "construction defect at x=" << c.label(d.x) << " y=" << c.label(d.y) << ": "
            << d.what() << '\n';
    return kExitViolations;
  }
  return kExitPass;
}

// --- roundtrip -----------------------------------------------------------

int cmd_roundtrip(Context& ctx, const std::string& path) {
  const AnyAlgebra a = load(path);
  const Carrier& c = carrier_of(a);
  CheckReport axioms = check_axioms(a);
  if (!axioms.passed()) return reject_input(ctx, axioms, c, "input fails its axioms");
  CheckReport result;
  if (const auto* e = std::get_if<EffectAlgebra>(&a)) {
    auto le = detect_lattice_effect(*e);
    if (auto* bad = std::get_if<NotALattice>(&le)) {
      ctx.err << "induced order is not a lattice: " << c.label(bad->x) << ' ' << c.label(bad->y)
              << " have no unique " << bad->missing << '\n';
      return kExitViolations;
    }
    result = roundtrip_effect(std::get<LatticeEffectAlgebra>(le));
  } else if (const auto* p = std::get_if<PseudoeffectAlgebra>(&a)) {
    auto gp = detect_good_lattice_pseudo(*p);
    if (auto* r = std::get_if<CheckReport>(&gp)) {
      return reject_input(ctx, *r, c, "input is not a good lattice pseudoeffect algebra");
    }
    result = roundtrip_pseudoeffect(std::get<GoodLatticePseudoeffectAlgebra>(gp));
  } else {
    throw UsageError{"roundtrip takes an effect or pseudoeffect file"};
  }
  ctx.out << (result.passed() ? "IDENTICAL" : "DIFFERENT") << '\n';
  print(ctx, result, c);
  return verdict(result);
}

// --- enumerate -----------------------------------------------------------

int cmd_enumerate(Context& ctx, const std::string& kind_name, std::size_t size, bool up_to_iso,
                  std::optional<std::size_t> limit, const std::string& emit_dir) {
  const auto kind = parse_model_kind(kind_name);
  if (!kind) throw UsageError{"unknown kind '" + kind_name + "'"};
  EnumerationTask task{*kind, size, up_to_iso, limit};
  if (!emit_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(emit_dir, ec);
    if (ec) throw UsageError{"cannot create " + emit_dir + ": " + ec.message()};
  }
  std::size_t ordinal = 0;
  std::string write_error;
  ModelSink sink;
  if (!emit_dir.empty()) {
    sink = [&](const AnyAlgebra& a) {
      ++ordinal;
      const auto file = std::filesystem::path(emit_dir) /
                        (kind_name + "-" + std::to_string(size) + "-" + std::to_string(ordinal) +
                         ".alg");
      std::ofstream f(file, std::ios::binary);
      f << serialize_algebra(a);
      if (!f && write_error.empty()) write_error = "cannot write " + file.string();
    };
  }
  EnumerationSummary s;
  try {
    s = enumerate_models(task, sink);
  } catch (const EnumerationError& e) {
    throw UsageError{e.what()};
  }
  if (!write_error.empty()) throw UsageError{write_error};
  ctx.out << "kind " << kind_name << '\n'
          << "size " << size << '\n'
          << "models " << s.raw_count << '\n'
          << "iso-classes " << s.iso_classes << '\n'
          << "emitted " << s.emitted << '\n'
          << "truncated " << (s.truncated ? "yes" : "no") << '\n';
  return kExitPass;
}

// --- probe ---------------------------------------------------------------

int cmd_probe(Context& ctx, const std::string& name, std::size_t size) {
  const bool commutative = name == "cqrl-image";
  EnumerationTask task{commutative ? ModelKind::Cqrl : ModelKind::Qrl, size, false, std::nullopt};
  std::size_t total = 0;
  std::size_t identical = 0;
  std::vector<std::string> lines;
  auto sink = [&](const AnyAlgebra& a) {
    ++total;
    const ProbeReport r = commutative ? probe_cqrl_image(std::get<CommQResLattice>(a))
                                      : probe_qrl_image(std::get<QResLattice>(a));
    if (r.identical) {
      ++identical;
      return;
    }
    const Carrier& c = carrier_of(a);
    std::string line = "model " + std::to_string(total) + " differs";
    if (!r.table.empty()) line += " in " + r.table;
    if (r.cell) line += " at x=" + c.label(r.cell->first) + " y=" + c.label(r.cell->second);
    if (!r.defect.empty()) line += ": " + r.defect;
    lines.push_back(std::move(line));
  };
  try {
    enumerate_models(task, sink);
  } catch (const EnumerationError& e) {
    throw UsageError{e.what()};
  }
  ctx.out << kProbeLabel << '\n'
          << "probe " << name << '\n'
          << "size " << size << '\n'
          << "models " << total << '\n'
          << "identical " << identical << '\n'
          << "different " << total - identical << '\n';
  for (const auto& l : lines) ctx.out << l << '\n';
  return kExitPass;
}

// --- catalog -------------------------------------------------------------

int cmd_catalog(Context& ctx, const std::string& name) {
  if (name.empty()) {
    for (const auto& entry : catalog()) {
      ctx.out << entry.name << ' ' << kind_token(kind_of(entry.algebra)) << ' '
              << carrier_of(entry.algebra).size() << "  " << entry.notes << '\n';
    }
    return kExitPass;
  }
  const auto entry = find_catalog_entry(name);
  if (!entry) throw UsageError{"no catalog entry named '" + name + "'"};
  ctx.out << serialize_algebra(entry->algebra);
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite effect algebra and quasiresiduated lattice laboratory", "qrlab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Report rendering")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string path;
  bool lemmas = false;
  bool divisibility = false;
  auto* check = app.add_subcommand("check", "Check the axioms of an algebra file");
  check->add_option("file", path, "Algebra file")->required();
  check->add_flag("--lemmas", lemmas, "Also run the property suites");
  check->add_flag("--divisibility", divisibility, "Also check divisibility (cqrl, qrl)");

  auto* order = app.add_subcommand("order", "Print the order of an algebra");
  order->add_option("file", path, "Algebra file")->required();

  std::string target;
  auto* transform = app.add_subcommand("transform", "Apply a construction");
  transform->add_option("--to", target, "Target kind")
      ->required()
      ->check(CLI::IsMember({"cqrl", "effect", "qrl", "pseudo"}));
  transform->add_option("file", path, "Algebra file")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "Rebuild an algebra through both constructions");
  roundtrip->add_option("file", path, "Algebra file")->required();

  std::string kind;
  std::size_t size = 0;
  bool up_to_iso = false;
  std::optional<std::size_t> limit;
  std::string emit_dir;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all models of a kind");
  enumerate->add_option("--kind", kind, "Model kind")->required();
  enumerate->add_option("--size", size, "Carrier size")->required();
  enumerate->add_flag("--up-to-iso", up_to_iso, "One model per isomorphism class");
  enumerate->add_option("--limit", limit, "Stop after this many models");
  enumerate->add_option("--emit", emit_dir, "Write each model to DIR");

  std::string probe_name;
  std::size_t probe_size = 0;
  auto* probe = app.add_subcommand("probe", "Run a conjecture probe over enumerated models");
  probe->add_option("--name", probe_name, "Probe")
      ->required()
      ->check(CLI::IsMember({"cqrl-image", "qrl-image"}));
  probe->add_option("--size", probe_size, "Carrier size")->required();

  std::string entry;
  auto* cat = app.add_subcommand("catalog", "List catalog entries or print one");
  cat->add_option("name", entry, "Entry name");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  Context ctx{out, err, format == "machine" ? ReportFormat::Machine : ReportFormat::Text};
  try {
    if (check->parsed()) return cmd_check(ctx, path, lemmas, divisibility);
    if (order->parsed()) return cmd_order(ctx, path);
    if (transform->parsed()) return cmd_transform(ctx, target, path);
    if (roundtrip->parsed()) return cmd_roundtrip(ctx, path);
    if (enumerate->parsed()) return cmd_enumerate(ctx, kind, size, up_to_iso, limit, emit_dir);
    if (probe->parsed()) return cmd_probe(ctx, probe_name, probe_size);
    if (cat->parsed()) return cmd_catalog(ctx, entry);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kExitError;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace qrlab::cli
