#pragma once

#include <string>
#include <vector>

namespace klein {

struct CheckResult {
  int id = 0;
  std::string name;
  std::string title;
  long checks = 0;
  long failures = 0;
  double seconds = 0;
  double bound_seconds = 0;  // 0 when the criterion has no runtime bound
  std::string first_failure;
  std::vector<std::string> notes;

  bool within_bound() const { return bound_seconds <= 0 || seconds <= bound_seconds; }
  bool passed() const { return failures == 0 && checks > 0 && within_bound(); }
  // Counts one check; remembers the first failing description.
  bool expect(bool ok, const std::string& what);
};

struct SuiteOptions {
  int max_degree = 0;  // 0 keeps each suite's own degree range
  unsigned seed = 2024;
};

struct SuiteInfo {
  int id;
  std::string name;
  std::string title;
  double bound_seconds;
};

const std::vector<SuiteInfo>& suites();
// Suite ids selected by a name, an id, "all", or the group "content".
// Throws std::invalid_argument for unknown names.
std::vector<int> select_suites(const std::string& name);
CheckResult run_suite(int id, const SuiteOptions& opt = {});

}  // namespace klein
