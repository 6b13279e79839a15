#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qrlab/element.hpp"

namespace qrlab {

struct CheckOptions {
  /// Witnesses kept per law.
  std::size_t witness_cap = 10;
  /// When false a law stops scanning once witness_cap is reached, so counts
  /// are lower bounds. Enumeration filters use this with a cap of 1.
  bool exhaustive = true;

  static CheckOptions fast() { return CheckOptions{1, false}; }
};

struct Witness {
  /// Elements of the failing tuple in scan order (rendered as x, y, z, w).
  std::vector<Element> elements;
  /// Which sub-condition failed, when a law has more than one.
  std::string note;

  bool operator==(const Witness&) const = default;
};

struct LawRecord {
  std::string id;
  std::string title;
  std::vector<Witness> witnesses;
  std::size_t violations = 0;
  bool truncated = false;
  /// Informational records never affect CheckReport::passed().
  bool informational = false;

  bool passed() const { return violations == 0; }
};

struct CheckReport {
  std::vector<LawRecord> laws;

  bool passed() const;
  const LawRecord* find(const std::string& id) const;
  bool failed(const std::string& id) const;
  /// Ids of failing, non-informational laws in report order.
  std::vector<std::string> failing_ids() const;
  void append(const CheckReport& other);
  void add(LawRecord record) { laws.push_back(std::move(record)); }
};

/// Accumulates the witnesses of one law while a checker scans tuples in
/// lexicographic order.
class LawRecorder {
 public:
  LawRecorder(std::string id, std::string title, const CheckOptions& options);

  void violation(std::initializer_list<Element> elements, std::string note = {});
  /// True once further scanning cannot change what gets reported.
  bool done() const { return !options_.exhaustive && record_.violations >= options_.witness_cap; }
  bool clean() const { return record_.violations == 0; }
  LawRecord finish() &&;

 private:
  CheckOptions options_;
  LawRecord record_;
};

}  // namespace qrlab
