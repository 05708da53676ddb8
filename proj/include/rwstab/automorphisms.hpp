#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "rwstab/graph.hpp"
#include "rwstab/perm_group.hpp"
#include "rwstab/permutation.hpp"
#include "rwstab/refinement.hpp"

namespace rwstab {

struct SearchOptions {
  /// Colouring that automorphisms must preserve; uniform when absent.
  std::optional<Coloring> initial_coloring;
  /// Abort with SearchTimeout once passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Relabeled edge list under the canonical vertex order plus a 64-bit digest.
struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::uint64_t digest = 0;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.digest == b.digest && a.vertex_count == b.vertex_count && a.edges == b.edges;
  }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.vertex_count <=> b.vertex_count; c != 0) return c;
    return a.edges <=> b.edges;
  }
};

/// Full automorphism group by individualization-refinement.
///
/// The search follows one path of the tree to a discrete partition and then,
/// level by level from the bottom, looks for an automorphism taking each
/// remaining vertex of the target cell onto the path. Vertices already in
/// the orbit of the path vertex, and vertices known to be equivalent to a
/// failed one, are skipped. Every generator is checked against the edge set
/// before it is kept. The individualized vertices form the base of the
/// returned group.
PermGroup automorphism_group(const Graph& g, const SearchOptions& options = {});

/// Generators in discovery order (deepest level first), with the base.
struct AutomorphismSearchResult {
  std::vector<Permutation> generators;
  std::vector<Point> base;
  std::vector<std::size_t> orbit_sizes;  // per base point, product = |Aut|
  std::size_t tree_nodes = 0;
};
AutomorphismSearchResult search_automorphisms(const Graph& g, const SearchOptions& options = {});

struct CanonicalLabeling {
  /// position_of[v] is the canonical index of vertex v.
  std::vector<Vertex> position_of;
  CanonicalForm form;
};

/// Canonical relabeling: the minimum leaf certificate over the whole search
/// tree (automorphism-equivalent branches pruned). Equal for isomorphic
/// inputs.
CanonicalLabeling canonical_labeling(const Graph& g, const SearchOptions& options = {});
CanonicalForm canonical_form(const Graph& g, const SearchOptions& options = {});

/// A vertex map taking edges of g1 onto edges of g2, verified, or nullopt.
std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2);

/// Number of orbits of `aut` on unordered edges. Throws std::invalid_argument
/// when a generator is not an automorphism of g.
std::size_t edge_orbit_count(const Graph& g, const PermGroup& aut);

/// Edge orbits as edge-index lists (indices into g.edges()), each sorted,
/// ordered by smallest index.
std::vector<std::vector<std::size_t>> edge_orbits(const Graph& g, const PermGroup& aut);

/// Count of s-arcs (x0..xs), consecutive vertices adjacent, x_i != x_{i+2}.
std::size_t s_arc_count(const Graph& g, int s);

/// Whether `aut` is transitive on s-arcs: the orbit of one s-arc is compared
/// with the total count. Throws std::invalid_argument if g is disconnected,
/// has an isolated vertex, or s < 1.
bool is_s_arc_transitive(const Graph& g, const PermGroup& aut, int s);

}  // namespace rwstab
