#include "hopf_fusion/report.hpp"

namespace hopf_fusion {

void Report::add(std::string id, bool passed, std::string witness) {
  entries_.push_back({std::move(id), passed, passed ? std::string() : std::move(witness)});
}

void Report::add_first_failure(std::string id, const std::vector<std::string>& failures) {
  if (failures.empty())
    add(std::move(id), true);
  else
    add(std::move(id), false, failures.front());
}

void Report::append(const Report& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id)
      return &e;
  return nullptr;
}

bool Report::passed(const std::string& id) const {
  const CheckResult* e = find(id);
  return e && e->passed;
}

bool Report::all_passed() const {
  for (const auto& e : entries_)
    if (!e.passed)
      return false;
  return true;
}

} // namespace hopf_fusion
