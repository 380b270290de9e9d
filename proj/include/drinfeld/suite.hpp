#pragma once

#include <string>
#include <vector>

namespace drinfeld::suite {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteResult {
  std::string section;
  std::vector<Check> checks;
  double seconds = 0.0;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Section names: section2 .. section6 and "properties"; "all" runs everything.
std::vector<std::string> section_names();
SuiteResult run_section(const std::string& name, unsigned jobs = 1);
std::vector<SuiteResult> run_all(unsigned jobs = 1);

}  // namespace drinfeld::suite
