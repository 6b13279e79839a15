#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qrlab/algebra.hpp"

namespace qrlab {

/// Algebra files: whitespace-separated tokens, one statement per line, '#'
/// starts a comment.
///
///   kind effect
///   size 3
///   labels 0 a 1
///   table plus        followed by `size` rows, row index = left operand
///   map comp 1 a 0
///   const zero 0
///   const one 1
///
/// Required blocks: effect plus, comp; pseudoeffect plus, bar, tilde; cqrl
/// join, meet, odot, arrow; qrl join, meet, odot, arrow, leadsto. "." marks an
/// undefined cell and is only legal in plus and odot.

struct ParseDiagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

/// "line L, column C: message"
std::string to_string(const ParseDiagnostic& d);

using ParseResult = std::variant<AnyAlgebra, std::vector<ParseDiagnostic>>;

/// Shape and token validation only; the axioms are not checked.
ParseResult parse_algebra(std::string_view text);

/// Canonical form: single spaces, blocks in the order listed above.
std::string serialize_algebra(const AnyAlgebra& a);

enum class ReportFormat { Text, Machine };

/// Machine form, one line per witness:
///   LAW <id> PASS
///   LAW <id> FAIL x=<label> y=<label> z=<label>
/// Informational records use INFO in place of LAW.
std::string render_report(const CheckReport& report, const Carrier& carrier, ReportFormat format);

}  // namespace qrlab
