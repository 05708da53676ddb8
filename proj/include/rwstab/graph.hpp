#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rwstab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are stored as sorted pairs (u < v) in ascending order, so iteration
/// and serialization are deterministic. Adjacency is kept twice: as sorted
/// neighbor lists for traversal and as dense bit rows for O(1) queries.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary pair list. Duplicates (in either
  /// orientation) are merged; self-loops and out-of-range endpoints throw
  /// std::invalid_argument.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);
  Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  /// Bit row of N(v); words_per_row() words, bit w set iff w ~ v.
  std::span<const std::uint64_t> adjacency_row(Vertex v) const {
    return {rows_.data() + v * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> rows_;
  std::size_t words_ = 0;
};

/// Ordered partition of a vertex set into non-empty disjoint cells.
class VertexPartition {
 public:
  VertexPartition() = default;

  /// Validates that `cells` partition {0..vertex_count-1}; throws
  /// std::invalid_argument otherwise. Cell order and in-cell order are kept.
  VertexPartition(std::size_t vertex_count, std::vector<std::vector<Vertex>> cells);

  static VertexPartition singletons(std::size_t vertex_count);

  std::size_t vertex_count() const { return cell_of_.size(); }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::vector<Vertex>>& cells() const { return cells_; }
  const std::vector<Vertex>& cell(std::size_t i) const { return cells_[i]; }
  std::size_t cell_of(Vertex v) const { return cell_of_[v]; }

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<std::vector<Vertex>> cells_;
  std::vector<std::size_t> cell_of_;
};

bool is_connected(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

struct Bipartition {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

/// Two-colouring of g if it exists. In every component the side holding the
/// component's smallest vertex goes to `first`. Both sides sorted.
std::optional<Bipartition> bipartition(const Graph& g);

/// All pairs {u,v}, u < v, with N(u) = N(v), sorted.
std::vector<Edge> twin_pairs(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original_vertex[i] is the vertex of the parent graph relabeled to i.
  std::vector<Vertex> original_vertex;
};

/// Subgraph induced by `vertices` (relabeled in sorted order). Throws on an
/// empty or out-of-range set.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Quotient by `cells`: vertex i is cell i; {i,j} is an edge iff some edge of
/// g joins the two cells. Throws if the partition is over a different vertex
/// count.
Graph quotient_graph(const Graph& g, const VertexPartition& cells);

/// Graph obtained by renaming vertex v to images[v].
Graph relabel(const Graph& g, std::span<const Vertex> images);

}  // namespace rwstab
