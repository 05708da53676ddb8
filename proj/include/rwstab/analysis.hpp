#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "rwstab/families.hpp"
#include "rwstab/perm_group.hpp"
#include "rwstab/rose_window.hpp"
#include "rwstab/stability.hpp"

namespace rwstab {

struct AnalysisOptions {
  /// Wall-clock budget for the whole instance; none means unbounded.
  std::optional<std::chrono::duration<double>> timeout;
};

/// Everything computed for one triple. Orders are exact.
struct InstanceRecord {
  RoseWindowParams params;
  bool timeout = false;

  bool degenerate = false;
  bool connected = false;
  bool bipartite = false;
  bool bipartite_by_params = false;
  bool cdc_connected = false;
  std::size_t twin_count = 0;

  BigInt aut_order;
  BigInt cdc_aut_order;
  StabilityClass stability;

  std::vector<MembershipWitness> witnesses;
  std::vector<Family> families;
  /// Families reached by graph isomorphism; filled only by the sweep's
  /// canonical-form fallback.
  std::optional<std::vector<Family>> iso_families;

  std::size_t edge_orbits = 0;
  std::size_t cdc_edge_orbits = 0;
  bool cdc_edge_transitive = false;
  std::optional<EdgeTransitiveMatch> edge_transitive_family;
  TheoremCase theorem_case = TheoremCase::none;
  /// "V1", "V2", "V3" as applicable.
  std::vector<std::string> violations;

  // Consistency checks recorded for the property suite.
  bool expected_order_ok = false;      // |expected group| = 2|Aut|
  bool expected_in_cover = false;      // every expected generator in Aut(CDC)
  bool fiber_scan_unstable = false;    // some cover generator breaks a fiber
  std::optional<UnexpectednessReport> unexpectedness;  // non-bipartite only
  OrderPropositions order_propositions;
  std::optional<bool> central_half_turn;
  std::optional<ArcTransitivity> arc_transitivity;

  bool stable() const { return stability.kind == StabilityKind::stable; }
};

/// Full analysis of R_n(a,r). On timeout the record has timeout = true and
/// only the cheap fields filled.
InstanceRecord analyze(const RoseWindowParams& p, const AnalysisOptions& options = {});

/// Sets theorem_case and violations from the other fields.
void assess_violations(InstanceRecord& record);

}  // namespace rwstab
