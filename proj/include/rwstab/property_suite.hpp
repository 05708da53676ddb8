#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rwstab {

struct PropertyCheck {
  std::string name;
  std::string statement;
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// First few failing instances, as "n:a:r".
  std::vector<std::string> examples;
  /// Informational lines are printed but do not affect the verdict.
  bool informational = false;

  bool passed() const { return failed == 0; }
  void record(bool ok, const std::string& instance);
};

struct PropertySuiteResult {
  int n_min = 3;
  int n_max = 3;
  std::vector<PropertyCheck> checks;
  bool passed() const;
};

/// Runs every structural check on all triples with n_min <= n <= n_max.
/// Throws std::invalid_argument unless 3 <= n_min <= n_max and jobs >= 1.
PropertySuiteResult run_property_suite(int n_min, int n_max, unsigned jobs = 1);

void print_property_table(std::ostream& out, const PropertySuiteResult& result);

}  // namespace rwstab
