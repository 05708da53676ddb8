#include "rwstab/analysis.hpp"

#include <algorithm>

#include "rwstab/automorphisms.hpp"
#include "rwstab/double_cover.hpp"

namespace rwstab {

void assess_violations(InstanceRecord& record) {
  record.violations.clear();
  record.theorem_case = TheoremCase::none;
  if (record.timeout) return;
  const bool nontrivial = record.stability.kind == StabilityKind::nontrivially_unstable;
  if (nontrivial) record.theorem_case = theorem_case(record.params, record.cdc_edge_transitive);
  if (nontrivial && record.families.empty()) record.violations.emplace_back("V1");
  if (!record.families.empty() && record.stable()) record.violations.emplace_back("V2");
  if (nontrivial) {
    const auto predicted = predicted_families(record.theorem_case);
    const bool hit = std::any_of(record.families.begin(), record.families.end(), [&](Family f) {
      return std::find(predicted.begin(), predicted.end(), f) != predicted.end();
    });
    if (!hit) record.violations.emplace_back("V3");
  }
}

InstanceRecord analyze(const RoseWindowParams& p, const AnalysisOptions& options) {
  InstanceRecord rec;
  rec.params = p;
  rec.degenerate = is_degenerate(p);
  rec.bipartite_by_params = bipartite_by_params(p);
  rec.witnesses = family_membership(p);
  rec.families = families_of(rec.witnesses);
  rec.edge_transitive_family = edge_transitive_family(p);

  const Graph g = build(p);
  const Graph cover = build_cdc(p);
  rec.connected = is_connected(g);
  rec.bipartite = bipartition(g).has_value();
  rec.cdc_connected = is_connected(cover);
  rec.twin_count = twin_pairs(g).size();

  SearchOptions search;
  if (options.timeout) {
    search.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(*options.timeout);
  }
  try {
    const PermGroup aut = automorphism_group(g, search);
    const PermGroup cover_aut = automorphism_group(cover, search);
    rec.aut_order = aut.order();
    rec.cdc_aut_order = cover_aut.order();
    rec.stability = classify(g, aut, cover_aut);

    rec.edge_orbits = edge_orbit_count(g, aut);
    rec.cdc_edge_orbits = edge_orbit_count(cover, cover_aut);
    rec.cdc_edge_transitive = rec.cdc_edge_orbits == 1;

    try {
      const PermGroup expected = expected_group(aut);
      rec.expected_order_ok = true;
      rec.expected_in_cover = std::all_of(expected.generators().begin(), expected.generators().end(),
                                          [&](const Permutation& s) { return cover_aut.contains(s); });
    } catch (const std::logic_error&) {
      rec.expected_order_ok = false;
    }
    rec.fiber_scan_unstable =
        std::any_of(cover_aut.generators().begin(), cover_aut.generators().end(),
                    [&](const Permutation& s) { return !preserves_fibers(s, g.vertex_count()); });
    if (!rec.bipartite_by_params) rec.unexpectedness = unexpectedness_report(p, cover_aut);

    rec.order_propositions = order_propositions_check(p, aut, rec.edge_orbits);
    const bool nontrivial = rec.stability.kind == StabilityKind::nontrivially_unstable;
    rec.central_half_turn = central_half_turn_check(p, cover_aut, nontrivial, rec.cdc_edge_transitive);
    rec.arc_transitivity = arc_transitivity_check(p, cover_aut, rec.cdc_edge_transitive);
  } catch (const SearchTimeout&) {
    rec.timeout = true;
  }
  assess_violations(rec);
  return rec;
}

}  // namespace rwstab
