#include "qrlab/text_format.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace qrlab {

namespace {

enum class BlockType { Partial, Total, Map };

struct BlockSpec {
  const char* name;
  BlockType type;
};

std::vector<BlockSpec> blocks_of(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Effect:
      return {{"plus", BlockType::Partial}, {"comp", BlockType::Map}};
    case AlgebraKind::Pseudoeffect:
      return {{"plus", BlockType::Partial}, {"bar", BlockType::Map}, {"tilde", BlockType::Map}};
    case AlgebraKind::Cqrl:
      return {{"join", BlockType::Total},
              {"meet", BlockType::Total},
              {"odot", BlockType::Partial},
              {"arrow", BlockType::Total}};
    case AlgebraKind::Qrl:
      return {{"join", BlockType::Total},
              {"meet", BlockType::Total},
              {"odot", BlockType::Partial},
              {"arrow", BlockType::Total},
              {"leadsto", BlockType::Total}};
  }
  return {};
}

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

struct Failure {
  ParseDiagnostic diagnostic;
};

[[noreturn]] void fail(std::size_t line, std::size_t column, std::string message) {
  throw Failure{{line, column, std::move(message)}};
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

class Parser {
 public:
  AnyAlgebra run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      statement(line_no, tokenize(text.substr(start, end - start)));
      start = end + 1;
    }
    return finish(line_no + 1);
  }

 private:
  void statement(std::size_t line, const std::vector<Token>& toks) {
    if (toks.empty()) return;
    if (pending_) {
      row(line, toks);
      return;
    }
    const std::string_view word = toks[0].text;
    if (word == "kind") {
      if (kind_) fail(line, toks[0].column, "duplicate block 'kind'");
      expect_args(line, toks, 2);
      kind_ = parse_kind_token(toks[1].text);
      if (!kind_) fail(line, toks[1].column, "unknown kind " + quoted(toks[1].text));
      specs_ = blocks_of(*kind_);
      return;
    }
    if (!kind_) fail(line, toks[0].column, "the file must start with a kind line");
    if (word == "size") {
      if (size_) fail(line, toks[0].column, "duplicate block 'size'");
      expect_args(line, toks, 2);
      std::size_t n = 0;
      const auto t = toks[1].text;
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
      if (ec != std::errc() || ptr != t.data() + t.size() || n < 2) {
        fail(line, toks[1].column, "bad size " + quoted(t) + " (need an integer >= 2)");
      }
      size_ = n;
      return;
    }
    if (!size_) fail(line, toks[0].column, "size line expected before " + quoted(word));
    if (word == "labels") {
      if (carrier_) fail(line, toks[0].column, "duplicate block 'labels'");
      expect_args(line, toks, *size_ + 1);
      std::vector<std::string> labels;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].text == kUndefinedToken) fail(line, toks[i].column, "'.' is not a valid label");
        labels.emplace_back(toks[i].text);
      }
      try {
        carrier_ = Carrier(std::move(labels));
      } catch (const StructuralError& e) {
        fail(line, toks[1].column, e.what());
      }
      return;
    }
    if (!carrier_) fail(line, toks[0].column, "labels line expected before " + quoted(word));
    if (word == "table") {
      expect_args(line, toks, 2);
      const BlockSpec& spec = block(line, toks[1], BlockType::Partial);
      const std::string name(spec.name);
      if (spec.type == BlockType::Partial) {
        partial_.emplace(name, PartialBinaryTable(*size_));
      } else {
        total_.emplace(name, TotalBinaryTable(*size_));
      }
      pending_ = Pending{name, spec.type == BlockType::Partial, 0};
      return;
    }
    if (word == "map") {
      if (toks.size() < 2) fail(line, toks[0].column, "map needs a name");
      const BlockSpec& spec = block(line, toks[1], BlockType::Map);
      if (toks.size() != *size_ + 2) {
        fail(line, toks[0].column, "map " + std::string(spec.name) + " has " +
                                       std::to_string(toks.size() - 2) + " entries, expected " +
                                       std::to_string(*size_));
      }
      UnaryTable u(*size_);
      for (std::size_t i = 0; i < *size_; ++i) u.set(i, element(line, toks[i + 2], false).value());
      maps_.emplace(spec.name, std::move(u));
      return;
    }
    if (word == "const") {
      expect_args(line, toks, 3);
      std::optional<Element>* slot = nullptr;
      if (toks[1].text == "zero") slot = &zero_;
      if (toks[1].text == "one") slot = &one_;
      if (!slot) fail(line, toks[1].column, "unknown constant " + quoted(toks[1].text));
      if (slot->has_value()) fail(line, toks[0].column, "duplicate block 'const " + std::string(toks[1].text) + "'");
      *slot = element(line, toks[2], false);
      return;
    }
    fail(line, toks[0].column, "unknown statement " + quoted(word));
  }

  void row(std::size_t line, const std::vector<Token>& toks) {
    Pending& p = *pending_;
    const std::size_t n = *size_;
    if (toks.size() != n) {
      fail(line, toks[0].column, "row " + std::to_string(p.rows + 1) + " of table " + p.name +
                                     " has " + std::to_string(toks.size()) + " entries, expected " +
                                     std::to_string(n));
    }
    const Element x = p.rows;
    for (Element y = 0; y < n; ++y) {
      const auto v = element(line, toks[y], p.partial);
      if (p.partial) {
        partial_.at(p.name).set(x, y, v);
      } else {
        total_.at(p.name).set(x, y, *v);
      }
    }
    if (++p.rows == n) pending_.reset();
  }

  const BlockSpec& block(std::size_t line, const Token& name, BlockType wanted) {
    for (const BlockSpec& s : specs_) {
      if (name.text != s.name) continue;
      const bool is_map = s.type == BlockType::Map;
      if (is_map != (wanted == BlockType::Map)) {
        fail(line, name.column, quoted(name.text) + (is_map ? " is a map" : " is a table") +
                                    " for kind " + std::string(kind_token(*kind_)));
      }
      if (partial_.contains(s.name) || total_.contains(s.name) || maps_.contains(s.name)) {
        fail(line, name.column, "duplicate block " + quoted(name.text));
      }
      return s;
    }
    fail(line, name.column,
         "unknown block " + quoted(name.text) + " for kind " + std::string(kind_token(*kind_)));
  }

  std::optional<Element> element(std::size_t line, const Token& tok, bool allow_undefined) {
    if (tok.text == kUndefinedToken) {
      if (!allow_undefined) fail(line, tok.column, "'.' is only allowed in a partial table");
      return std::nullopt;
    }
    auto e = carrier_->find(tok.text);
    if (!e) fail(line, tok.column, "unknown label " + quoted(tok.text));
    return e;
  }

  static void expect_args(std::size_t line, const std::vector<Token>& toks, std::size_t count) {
    if (toks.size() != count) {
      fail(line, toks[0].column, quoted(toks[0].text) + " expects " + std::to_string(count - 1) +
                                     " argument(s), got " + std::to_string(toks.size() - 1));
    }
  }

  AnyAlgebra finish(std::size_t eof_line) {
    if (!kind_) fail(eof_line, 1, "missing block 'kind'");
    if (!size_) fail(eof_line, 1, "missing block 'size'");
    if (!carrier_) fail(eof_line, 1, "missing block 'labels'");
    if (pending_) {
      fail(eof_line, 1, "table " + pending_->name + " ends after " +
                            std::to_string(pending_->rows) + " of " + std::to_string(*size_) +
                            " rows");
    }
    for (const BlockSpec& s : specs_) {
      if (!partial_.contains(s.name) && !total_.contains(s.name) && !maps_.contains(s.name)) {
        fail(eof_line, 1, "missing block " + quoted(s.name));
      }
    }
    if (!zero_) fail(eof_line, 1, "missing block 'const zero'");
    if (!one_) fail(eof_line, 1, "missing block 'const one'");
    const Element z = *zero_;
    const Element o = *one_;
    switch (*kind_) {
      case AlgebraKind::Effect:
        return EffectAlgebra{*carrier_, partial_.at("plus"), maps_.at("comp"), z, o};
      case AlgebraKind::Pseudoeffect:
        return PseudoeffectAlgebra{*carrier_, partial_.at("plus"), maps_.at("bar"),
                                   maps_.at("tilde"), z, o};
      case AlgebraKind::Cqrl:
        return CommQResLattice{*carrier_,
                               lattice_from_operations(total_.at("join"), total_.at("meet"), z, o),
                               partial_.at("odot"), total_.at("arrow"), z, o};
      case AlgebraKind::Qrl:
        return QResLattice{*carrier_,
                           lattice_from_operations(total_.at("join"), total_.at("meet"), z, o),
                           partial_.at("odot"),
                           total_.at("arrow"),
                           total_.at("leadsto"),
                           z,
                           o};
    }
    fail(eof_line, 1, "unknown kind");
  }

  struct Pending {
    std::string name;
    bool partial;
    std::size_t rows;
  };

  std::optional<AlgebraKind> kind_;
  std::vector<BlockSpec> specs_;
  std::optional<std::size_t> size_;
  std::optional<Carrier> carrier_;
  std::map<std::string, PartialBinaryTable> partial_;
  std::map<std::string, TotalBinaryTable> total_;
  std::map<std::string, UnaryTable> maps_;
  std::optional<Element> zero_;
  std::optional<Element> one_;
  std::optional<Pending> pending_;
};

void write_partial(std::ostream& out, const char* name, const PartialBinaryTable& t,
                   const Carrier& c) {
  out << "table " << name << '\n';
  for (Element x = 0; x < t.size(); ++x) {
    for (Element y = 0; y < t.size(); ++y) {
      const auto v = t.at(x, y);
      out << (y ? " " : "") << (v ? c.label(*v) : std::string(kUndefinedToken));
    }
    out << '\n';
  }
}

void write_total(std::ostream& out, const char* name, const TotalBinaryTable& t, const Carrier& c) {
  out << "table " << name << '\n';
  for (Element x = 0; x < t.size(); ++x) {
    for (Element y = 0; y < t.size(); ++y) out << (y ? " " : "") << c.label(t.at(x, y));
    out << '\n';
  }
}

void write_map(std::ostream& out, const char* name, const UnaryTable& u, const Carrier& c) {
  out << "map " << name;
  for (Element x = 0; x < u.size(); ++x) out << ' ' << c.label(u(x));
  out << '\n';
}

const char* const kVariables[] = {"x", "y", "z", "w"};

std::string witness_text(const Witness& w, const Carrier& c) {
  std::string s;
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    if (i) s += ' ';
    s += i < 4 ? kVariables[i] : "v" + std::to_string(i);
    s += '=';
    s += w.elements[i] < c.size() ? c.label(w.elements[i]) : std::to_string(w.elements[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const ParseDiagnostic& d) {
  return "line " + std::to_string(d.line) + ", column " + std::to_string(d.column) + ": " +
         d.message;
}

ParseResult parse_algebra(std::string_view text) {
  try {
    return Parser{}.run(text);
  } catch (const Failure& f) {
    return std::vector<ParseDiagnostic>{f.diagnostic};
  }
}

std::string serialize_algebra(const AnyAlgebra& a) {
  std::ostringstream out;
  const Carrier& c = carrier_of(a);
  out << "kind " << kind_token(kind_of(a)) << '\n';
  out << "size " << c.size() << '\n';
  out << "labels";
  for (const auto& l : c.labels()) out << ' ' << l;
  out << '\n';
  Element zero = 0;
  Element one = 0;
  if (const auto* e = std::get_if<EffectAlgebra>(&a)) {
    write_partial(out, "plus", e->plus, c);
    write_map(out, "comp", e->comp, c);
    zero = e->zero;
    one = e->one;
  } else if (const auto* p = std::get_if<PseudoeffectAlgebra>(&a)) {
    write_partial(out, "plus", p->plus, c);
    write_map(out, "bar", p->bar, c);
    write_map(out, "tilde", p->tilde, c);
    zero = p->zero;
    one = p->one;
  } else if (const auto* q = std::get_if<CommQResLattice>(&a)) {
    write_total(out, "join", q->lattice.join, c);
    write_total(out, "meet", q->lattice.meet, c);
    write_partial(out, "odot", q->odot, c);
    write_total(out, "arrow", q->arrow, c);
    zero = q->zero;
    one = q->one;
  } else if (const auto* r = std::get_if<QResLattice>(&a)) {
    write_total(out, "join", r->lattice.join, c);
    write_total(out, "meet", r->lattice.meet, c);
    write_partial(out, "odot", r->odot, c);
    write_total(out, "arrow", r->arrow, c);
    write_total(out, "leadsto", r->leadsto, c);
    zero = r->zero;
    one = r->one;
  }
  out << "const zero " << c.label(zero) << '\n';
  out << "const one " << c.label(one) << '\n';
  return out.str();
}

std::string render_report(const CheckReport& report, const Carrier& carrier, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Machine) {
    for (const LawRecord& law : report.laws) {
      const char* head = law.informational ? "INFO " : "LAW ";
      if (law.passed()) {
        out << head << law.id << " PASS\n";
        continue;
      }
      if (law.witnesses.empty()) out << head << law.id << " FAIL\n";
      for (const Witness& w : law.witnesses) {
        out << head << law.id << " FAIL";
        if (!w.elements.empty()) out << ' ' << witness_text(w, carrier);
        out << '\n';
      }
    }
    return out.str();
  }
  std::size_t failing = 0;
  std::size_t counted = 0;
  for (const LawRecord& law : report.laws) {
    out << law.id << (law.passed() ? " PASS" : " FAIL");
    if (law.informational) out << " (informational)";
    out << "  " << law.title << '\n';
    if (!law.informational) {
      ++counted;
      if (!law.passed()) ++failing;
    }
    for (const Witness& w : law.witnesses) {
      out << "    " << witness_text(w, carrier);
      if (!w.note.empty()) out << "  " << w.note;
      out << '\n';
    }
    if (!law.passed()) {
      out << "    " << law.violations << (law.truncated ? "+" : "") << " violation(s)";
      if (law.witnesses.size() < law.violations || law.truncated) {
        out << ", " << law.witnesses.size() << " shown";
      }
      out << '\n';
    }
  }
  out << (failing ? "FAIL" : "PASS") << ": " << failing << " of " << counted << " law(s) failing\n";
  return out.str();
}

}  // namespace qrlab
