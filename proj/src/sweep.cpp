#include "rwstab/sweep.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "rwstab/automorphisms.hpp"

namespace rwstab {

std::vector<RoseWindowParams> canonical_triples(int n_min, int n_max) {
  std::vector<RoseWindowParams> out;
  for (int n = n_min; n <= n_max; ++n)
    for (int a = 1; 2 * a <= n; ++a)
      for (int r = 1; 2 * r <= n; ++r) out.push_back(RoseWindowParams::make(n, a, r));
  return out;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& work) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

// Canonical form of every literal family member on n, with its families.
using FormTable = std::map<std::vector<Edge>, std::set<Family>>;

FormTable member_forms(int n) {
  FormTable table;
  for (const auto& w : literal_family_members(n)) {
    table[canonical_form(build(w.matched_params)).edges].insert(w.family);
  }
  return table;
}

}  // namespace

SweepSummary summarize(const std::vector<InstanceRecord>& records, bool iso_fallback) {
  SweepSummary s;
  for (auto kind : {StabilityKind::stable, StabilityKind::trivially_unstable,
                    StabilityKind::nontrivially_unstable}) {
    s.counts[std::string(to_string(kind))] = 0;
  }
  s.counts["timeout"] = 0;
  if (iso_fallback) s.iso_discrepancies.emplace();
  for (const auto& rec : records) {
    if (rec.timeout) {
      ++s.counts["timeout"];
      s.timeouts.push_back(rec.params);
      continue;
    }
    ++s.counts[std::string(to_string(rec.stability.kind))];
    for (const auto& v : rec.violations) {
      (v == "V1" ? s.v1 : v == "V2" ? s.v2 : s.v3).push_back(rec.params);
    }
    if (iso_fallback && rec.iso_families && *rec.iso_families != rec.families) {
      s.iso_discrepancies->push_back(rec.params);
    }
  }
  return s;
}

SweepReport run_sweep(const SweepOptions& options) {
  if (options.n_min < 3 || options.n_min > options.n_max) {
    throw std::invalid_argument("need 3 <= n_min <= n_max, got " + std::to_string(options.n_min) +
                                ".." + std::to_string(options.n_max));
  }
  if (options.jobs < 1) throw std::invalid_argument("jobs must be at least 1");

  SweepReport report;
  report.n_range = {options.n_min, options.n_max};
  const auto triples = canonical_triples(options.n_min, options.n_max);

  std::vector<FormTable> tables;
  if (options.iso_fallback) {
    tables.resize(options.n_max - options.n_min + 1);
    parallel_for(tables.size(), options.jobs,
                 [&](std::size_t k) { tables[k] = member_forms(options.n_min + static_cast<int>(k)); });
  }

  report.records.resize(triples.size());
  AnalysisOptions analysis{options.timeout};
  parallel_for(triples.size(), options.jobs, [&](std::size_t i) {
    InstanceRecord rec = analyze(triples[i], analysis);
    if (options.iso_fallback && !rec.timeout) {
      const auto& table = tables[rec.params.n - options.n_min];
      auto it = table.find(canonical_form(build(rec.params)).edges);
      rec.iso_families.emplace();
      if (it != table.end()) rec.iso_families->assign(it->second.begin(), it->second.end());
    }
    report.records[i] = std::move(rec);
  });
  report.summary = summarize(report.records, options.iso_fallback);
  return report;
}

SweepReport verify_conjecture(int n_max, unsigned jobs) {
  return run_sweep({3, n_max, jobs, std::nullopt, false});
}

}  // namespace rwstab
