#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rwstab/graph.hpp"
#include "rwstab/perm_group.hpp"
#include "rwstab/permutation.hpp"

namespace rwstab {

/// Parameters of R_n(a, r): n >= 3 and 1 <= a, r <= n-1.
struct RoseWindowParams {
  int n = 0;
  int a = 0;
  int r = 0;

  /// Reduces a and r modulo n, then validates. Throws std::invalid_argument.
  static RoseWindowParams make(long long n, long long a, long long r);
  /// Parses "n:a:r".
  static RoseWindowParams parse(std::string_view text);
  std::string to_string() const;

  friend auto operator<=>(const RoseWindowParams&, const RoseWindowParams&) = default;
};

enum class VertexKind { u, v };

/// u_i / v_i in the base graph, u_{i,j} / v_{i,j} when `layer` is set.
struct VertexName {
  VertexKind kind = VertexKind::u;
  int i = 0;
  std::optional<int> layer;

  friend bool operator==(const VertexName&, const VertexName&) = default;
};

// Vertex ids. Base graph: u_i -> i, v_i -> n + i. Cover: (kind, i, j) ->
// j*2n + base id, which coincides with cdc_of_graph's (v, j) -> j*|V| + v.
Vertex base_id(const RoseWindowParams& p, VertexKind kind, int i);
Vertex cdc_id(const RoseWindowParams& p, VertexKind kind, int i, int j);
VertexName base_name(const RoseWindowParams& p, Vertex id);
VertexName cdc_name(const RoseWindowParams& p, Vertex id);
/// "u[3]" for base vertices, "v[3,1]" for cover vertices.
std::string label(const VertexName& name);

/// R_n(a, r) on 2n vertices, coincident hub edges merged.
Graph build(const RoseWindowParams& p);
/// True when 2r = 0 mod n, i.e. hub edges coincide in pairs.
bool is_degenerate(const RoseWindowParams& p);

/// The canonical double cover written out from its own edge list.
Graph build_cdc(const RoseWindowParams& p);

/// (a, r), (-a, r), (a, -r), (-a, -r), duplicates dropped, in that order.
std::vector<RoseWindowParams> iso_variants(const RoseWindowParams& p);
/// The variant with a, r <= n/2.
RoseWindowParams canonical_params(const RoseWindowParams& p);
bool is_canonical(const RoseWindowParams& p);

struct CdcStructure {
  /// Each cycle as a closed vertex sequence (first vertex not repeated).
  std::vector<std::vector<Vertex>> rim_cycles;
  /// Cycles, or two-vertex pieces when the hub edges form a matching.
  std::vector<std::vector<Vertex>> hub_components;
  std::vector<std::vector<Vertex>> spoke_cycles;
  /// S1..S4 for even n, each sorted.
  std::optional<std::array<std::vector<Vertex>, 4>> s_partition;
  bool hub_is_matching = false;
};

/// Traverses the three edge classes of the cover.
CdcStructure cdc_structure(const RoseWindowParams& p);

struct CycleLengths {
  int hub = 0;
  int spoke = 0;
};
/// Closed-form hub and spoke cycle lengths. Throws std::invalid_argument
/// when 2r = 0 mod n.
CycleLengths predicted_cycle_lengths(const RoseWindowParams& p);

/// n even, a even, r odd.
bool bipartite_by_params(const RoseWindowParams& p);

/// Rotation u_{i,j} -> u_{i+1,j}, v_{i,j} -> v_{i+1,j}.
Permutation rho(const RoseWindowParams& p);
/// Reflection u_{i,j} -> u_{-i,j}, v_{i,j} -> v_{-i-a,j}.
Permutation mu(const RoseWindowParams& p);
/// Layer swap u_{i,j} -> u_{i,j+1}, v_{i,j} -> v_{i,j+1}.
Permutation beta(const RoseWindowParams& p);

/// Layer swap together with lifts of generators of Aut(R_n(a,r)).
PermGroup expected_group(const RoseWindowParams& p);

/// Whether a cover automorphism is expected. Decided both by fiber
/// preservation and by commuting with beta; the two answers must agree
/// (std::logic_error otherwise). Throws std::invalid_argument when the base
/// graph is bipartite or sigma is not an automorphism of the cover.
bool is_expected(const RoseWindowParams& p, const Permutation& sigma);

struct OddCoverRewrite {
  RoseWindowParams target;
  /// Cover vertex id -> vertex id of build(target).
  Permutation map;
};

/// For odd n the cover is itself a Rose Window graph on 4n vertices. The map
/// is checked to carry build_cdc(p) exactly onto build(target). Throws
/// std::invalid_argument for even n.
OddCoverRewrite odd_n_cdc_params(const RoseWindowParams& p);

struct QuotientReduction {
  RoseWindowParams params;
  /// Cell c holds the cover vertices sent to cover vertex c of the reduced
  /// parameters; these are the orbits of the rotation subgroup of order h.
  VertexPartition cells;
};

/// Quotient of the cover by the subgroup of <rho> of order h, with
/// k = n/h. Throws std::invalid_argument unless h divides n, k >= 3 and
/// both a and r stay non-zero modulo k.
QuotientReduction quotient_params(const RoseWindowParams& p, int h);

/// Non-negative residue of x modulo n.
inline int mod(long long x, long long n) {
  long long y = x % n;
  return static_cast<int>(y < 0 ? y + n : y);
}

}  // namespace rwstab
