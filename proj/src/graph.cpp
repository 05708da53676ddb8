#include "rwstab/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace rwstab {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : adjacency_(vertex_count), words_((vertex_count + 63) / 64) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} has an endpoint outside 0.." +
                                  std::to_string(vertex_count) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  rows_.assign(vertex_count * words_, 0);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

VertexPartition::VertexPartition(std::size_t vertex_count,
                                 std::vector<std::vector<Vertex>> cells)
    : cells_(std::move(cells)), cell_of_(vertex_count, SIZE_MAX) {
  std::size_t covered = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].empty()) throw std::invalid_argument("partition has an empty cell");
    for (Vertex v : cells_[i]) {
      if (v >= vertex_count) {
        throw std::invalid_argument("partition cell contains out-of-range vertex " +
                                    std::to_string(v));
      }
      if (cell_of_[v] != SIZE_MAX) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " appears in two partition cells");
      }
      cell_of_[v] = i;
      ++covered;
    }
  }
  if (covered != vertex_count) {
    throw std::invalid_argument("partition does not cover every vertex");
  }
}

VertexPartition VertexPartition::singletons(std::size_t vertex_count) {
  std::vector<std::vector<Vertex>> cells(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) cells[v] = {static_cast<Vertex>(v)};
  return VertexPartition(vertex_count, std::move(cells));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> components;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> component{start};
    seen[start] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (Vertex w : g.neighbors(component[head])) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex start = 0; start < n; ++start) {
    if (side[start] != -1) continue;
    // Components are discovered from their smallest vertex, which gets side 0.
    side[start] = 0;
    std::queue<Vertex> pending;
    pending.push(start);
    while (!pending.empty()) {
      Vertex v = pending.front();
      pending.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          pending.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition result;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? result.first : result.second).push_back(v);
  return result;
}

std::vector<Edge> twin_pairs(const Graph& g) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_neighborhood;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    by_neighborhood[std::vector<Vertex>(nb.begin(), nb.end())].push_back(v);
  }
  std::vector<Edge> pairs;
  for (const auto& [nb, group] : by_neighborhood) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) pairs.emplace_back(group[i], group[j]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw std::invalid_argument("induced subgraph of an empty vertex set");
  InducedSubgraph result;
  result.original_vertex.assign(vertices.begin(), vertices.end());
  std::sort(result.original_vertex.begin(), result.original_vertex.end());
  result.original_vertex.erase(
      std::unique(result.original_vertex.begin(), result.original_vertex.end()),
      result.original_vertex.end());
  if (result.original_vertex.back() >= g.vertex_count()) {
    throw std::invalid_argument("induced subgraph vertex out of range");
  }
  std::vector<Vertex> index(g.vertex_count(), UINT32_MAX);
  for (std::size_t i = 0; i < result.original_vertex.size(); ++i) {
    index[result.original_vertex[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] != UINT32_MAX && index[v] != UINT32_MAX) edges.emplace_back(index[u], index[v]);
  }
  result.graph = Graph(result.original_vertex.size(), edges);
  return result;
}

Graph quotient_graph(const Graph& g, const VertexPartition& cells) {
  if (cells.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("quotient partition is over " +
                                std::to_string(cells.vertex_count()) + " vertices, graph has " +
                                std::to_string(g.vertex_count()));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    auto cu = static_cast<Vertex>(cells.cell_of(u));
    auto cv = static_cast<Vertex>(cells.cell_of(v));
    if (cu != cv) edges.emplace_back(cu, cv);
  }
  return Graph(cells.cell_count(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> images) {
  if (images.size() != g.vertex_count()) throw std::invalid_argument("relabel size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(images[u], images[v]);
  return Graph(g.vertex_count(), edges);
}

}  // namespace rwstab
