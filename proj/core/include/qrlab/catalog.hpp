#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrlab/algebra.hpp"

namespace qrlab {

struct CatalogEntry {
  std::string name;
  AnyAlgebra algebra;
  std::string notes;
};

/// Named small algebras. The five effect algebras boolean2, mv3, mv4, diamond
/// and hsum-mv3 come with "<name>-pseudo" (bar = tilde = comp), "<name>-cqrl"
/// and "<name>-qrl" companions built by the constructions.
const std::vector<CatalogEntry>& catalog();

std::optional<CatalogEntry> find_catalog_entry(std::string_view name);

}  // namespace qrlab
