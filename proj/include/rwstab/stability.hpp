#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rwstab/automorphisms.hpp"
#include "rwstab/graph.hpp"
#include "rwstab/perm_group.hpp"
#include "rwstab/rose_window.hpp"

namespace rwstab {

enum class StabilityKind { stable, trivially_unstable, nontrivially_unstable };

enum class TrivialReason { disconnected, bipartite_with_nontrivial_aut, twin_vertices };

std::string_view to_string(StabilityKind kind);
std::string_view to_string(TrivialReason reason);

struct StabilityClass {
  StabilityKind kind = StabilityKind::stable;
  /// Every trivial reason that applies, in enum order. Empty unless the
  /// kind is trivially_unstable.
  std::vector<TrivialReason> reasons;
  /// First cover-group generator outside the expected group (unstable only).
  std::optional<Permutation> witness;
  BigInt aut_order = 1;
  BigInt cdc_aut_order = 1;
};

/// |Aut(CDC(g))| == 2|Aut(g)|.
bool is_stable(const Graph& g, const SearchOptions& options = {});

StabilityClass classify(const Graph& g, const SearchOptions& options = {});

/// Same, with both groups already computed. `cover_aut` must be the full
/// automorphism group of cdc_of_graph(g) under its id scheme.
StabilityClass classify(const Graph& g, const PermGroup& aut, const PermGroup& cover_aut);

struct GeneratorVerdict {
  bool preserves_fibers = false;
  bool commutes_with_swap = false;
};

struct UnexpectednessReport {
  std::vector<GeneratorVerdict> generators;
  std::size_t expected_count = 0;     // both tests say expected
  std::size_t unexpected_count = 0;   // both tests say unexpected
  std::size_t disagreements = 0;
  bool columns_agree() const { return disagreements == 0; }
};

/// Both expectedness tests on every generator of Aut(CDC(R_n(a,r))).
/// Throws std::invalid_argument for bipartite parameters.
UnexpectednessReport unexpectedness_report(const RoseWindowParams& p,
                                           const SearchOptions& options = {});
UnexpectednessReport unexpectedness_report(const RoseWindowParams& p, const PermGroup& cover_aut);

}  // namespace rwstab
