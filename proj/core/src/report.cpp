#include "qrlab/report.hpp"

#include <algorithm>
#include <utility>

namespace qrlab {

bool CheckReport::passed() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const LawRecord& r) { return r.informational || r.passed(); });
}

const LawRecord* CheckReport::find(const std::string& id) const {
  auto it = std::find_if(laws.begin(), laws.end(), [&](const LawRecord& r) { return r.id == id; });
  return it == laws.end() ? nullptr : &*it;
}

bool CheckReport::failed(const std::string& id) const {
  const LawRecord* r = find(id);
  return r != nullptr && !r->passed();
}

std::vector<std::string> CheckReport::failing_ids() const {
  std::vector<std::string> ids;
  for (const auto& r : laws) {
    if (!r.informational && !r.passed()) ids.push_back(r.id);
  }
  return ids;
}

void CheckReport::append(const CheckReport& other) {
  laws.insert(laws.end(), other.laws.begin(), other.laws.end());
}

LawRecorder::LawRecorder(std::string id, std::string title, const CheckOptions& options)
    : options_(options) {
  record_.id = std::move(id);
  record_.title = std::move(title);
}

void LawRecorder::violation(std::initializer_list<Element> elements, std::string note) {
  ++record_.violations;
  if (record_.witnesses.size() < options_.witness_cap) {
    record_.witnesses.push_back(Witness{std::vector<Element>(elements), std::move(note)});
  } else {
    record_.truncated = true;
  }
}

LawRecord LawRecorder::finish() && { return std::move(record_); }

}  // namespace qrlab
