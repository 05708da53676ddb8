#include "rwstab/stability.hpp"

#include <stdexcept>

#include "rwstab/double_cover.hpp"

namespace rwstab {

std::string_view to_string(StabilityKind kind) {
  switch (kind) {
    case StabilityKind::stable: return "Stable";
    case StabilityKind::trivially_unstable: return "TriviallyUnstable";
    case StabilityKind::nontrivially_unstable: return "NontriviallyUnstable";
  }
  return "?";
}

std::string_view to_string(TrivialReason reason) {
  switch (reason) {
    case TrivialReason::disconnected: return "disconnected";
    case TrivialReason::bipartite_with_nontrivial_aut: return "bipartite_with_nontrivial_aut";
    case TrivialReason::twin_vertices: return "twin_vertices";
  }
  return "?";
}

bool is_stable(const Graph& g, const SearchOptions& options) {
  SearchOptions cover_options{std::nullopt, options.deadline};
  return automorphism_group(cdc_of_graph(g), cover_options).order() ==
         2 * automorphism_group(g, options).order();
}

StabilityClass classify(const Graph& g, const SearchOptions& options) {
  SearchOptions cover_options{std::nullopt, options.deadline};
  return classify(g, automorphism_group(g, options),
                  automorphism_group(cdc_of_graph(g), cover_options));
}

StabilityClass classify(const Graph& g, const PermGroup& aut, const PermGroup& cover_aut) {
  if (cover_aut.degree() != 2 * g.vertex_count() || aut.degree() != g.vertex_count()) {
    throw std::invalid_argument("group degrees do not match the graph");
  }
  StabilityClass out;
  out.aut_order = aut.order();
  out.cdc_aut_order = cover_aut.order();
  if (out.cdc_aut_order == 2 * out.aut_order) return out;

  if (!is_connected(g)) out.reasons.push_back(TrivialReason::disconnected);
  if (bipartition(g) && aut.order() > 1) {
    out.reasons.push_back(TrivialReason::bipartite_with_nontrivial_aut);
  }
  if (!twin_pairs(g).empty()) out.reasons.push_back(TrivialReason::twin_vertices);
  out.kind = out.reasons.empty() ? StabilityKind::nontrivially_unstable
                                 : StabilityKind::trivially_unstable;

  PermGroup expected = expected_group(aut);
  for (const auto& sigma : cover_aut.generators()) {
    if (!expected.contains(sigma)) {
      out.witness = sigma;
      break;
    }
  }
  if (!out.witness) throw std::logic_error("unstable graph without an unexpected generator");
  return out;
}

UnexpectednessReport unexpectedness_report(const RoseWindowParams& p, const SearchOptions& options) {
  return unexpectedness_report(p, automorphism_group(build_cdc(p), options));
}

UnexpectednessReport unexpectedness_report(const RoseWindowParams& p, const PermGroup& cover_aut) {
  if (bipartite_by_params(p)) {
    throw std::invalid_argument("expectedness criteria need a non-bipartite base graph");
  }
  const Permutation swap = beta(p);
  UnexpectednessReport report;
  for (const auto& sigma : cover_aut.generators()) {
    GeneratorVerdict verdict{preserves_fibers(sigma, 2 * p.n), commute(sigma, swap)};
    report.generators.push_back(verdict);
    if (verdict.preserves_fibers != verdict.commutes_with_swap) {
      ++report.disagreements;
    } else if (verdict.preserves_fibers) {
      ++report.expected_count;
    } else {
      ++report.unexpected_count;
    }
  }
  return report;
}

}  // namespace rwstab
