#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rwstab/analysis.hpp"

namespace rwstab {

inline constexpr const char* kToolVersion = "1.0.0";

struct SweepOptions {
  int n_min = 3;
  int n_max = 3;
  unsigned jobs = 1;
  std::optional<std::chrono::duration<double>> timeout;
  /// Also place each graph in families by canonical-form comparison with
  /// every literal family member on the same n.
  bool iso_fallback = false;
};

struct SweepSummary {
  std::map<std::string, std::size_t> counts;  // by stability kind, plus "timeout"
  std::vector<RoseWindowParams> v1, v2, v3;
  std::vector<RoseWindowParams> timeouts;
  /// Records whose iso_families differ from families (fallback runs only).
  std::optional<std::vector<RoseWindowParams>> iso_discrepancies;
  bool passed() const { return v1.empty() && v2.empty() && v3.empty(); }
};

struct SweepReport {
  std::string tool_version = kToolVersion;
  std::pair<int, int> n_range;
  std::vector<InstanceRecord> records;  // sorted by (n, a, r)
  SweepSummary summary;
};

/// Triples with 1 <= a, r <= n/2 for n_min <= n <= n_max, sorted.
std::vector<RoseWindowParams> canonical_triples(int n_min, int n_max);

/// Runs `work(i)` for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& work);

/// Analyzes every canonical triple. Throws std::invalid_argument unless
/// 3 <= n_min <= n_max and jobs >= 1. The report does not depend on jobs.
SweepReport run_sweep(const SweepOptions& options);

/// run_sweep over 3..n_max.
SweepReport verify_conjecture(int n_max, unsigned jobs = 1);

SweepSummary summarize(const std::vector<InstanceRecord>& records, bool iso_fallback);

}  // namespace rwstab
