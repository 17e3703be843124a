// Pass/fail records produced by the verification operations.

#ifndef HOPF_FUSION_REPORT_HPP_
#define HOPF_FUSION_REPORT_HPP_

#include <string>
#include <vector>

namespace hopf_fusion {

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string witness;  // empty on pass
};

class Report {
public:
  void add(std::string id, bool passed, std::string witness = {});
  // Records a pass, or a failure carrying the first witness found.
  void add_first_failure(std::string id, const std::vector<std::string>& failures);
  void append(const Report& other);

  const std::vector<CheckResult>& entries() const { return entries_; }
  const CheckResult* find(const std::string& id) const;
  bool passed(const std::string& id) const;
  bool all_passed() const;

private:
  std::vector<CheckResult> entries_;
};

} // namespace hopf_fusion

#endif
