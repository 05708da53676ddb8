#include "rwstab/double_cover.hpp"

#include <stdexcept>

namespace rwstab {

Graph cdc_of_graph(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count());
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, n + v);
    edges.emplace_back(v, n + u);
  }
  return Graph(2 * n, edges);
}

Permutation layer_swap(std::size_t base_count) {
  std::vector<Point> images(2 * base_count);
  for (std::size_t v = 0; v < base_count; ++v) {
    images[v] = static_cast<Point>(base_count + v);
    images[base_count + v] = static_cast<Point>(v);
  }
  return Permutation(std::move(images));
}

Permutation lift_to_cover(const Permutation& alpha) {
  const std::size_t n = alpha.degree();
  std::vector<Point> images(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    images[v] = alpha(static_cast<Point>(v));
    images[n + v] = static_cast<Point>(n + alpha(static_cast<Point>(v)));
  }
  return Permutation(std::move(images));
}

PermGroup expected_group(const PermGroup& base_aut) {
  const std::size_t n = base_aut.degree();
  std::vector<Permutation> gens;
  gens.reserve(base_aut.generators().size() + 1);
  for (const auto& alpha : base_aut.generators()) gens.push_back(lift_to_cover(alpha));
  gens.push_back(layer_swap(n));
  PermGroup group(2 * n, std::move(gens));
  if (n > 0 && group.order() != 2 * base_aut.order()) {
    throw std::logic_error("expected group has the wrong order");
  }
  return group;
}

bool preserves_fibers(const Permutation& sigma, std::size_t base_count) {
  if (sigma.degree() != 2 * base_count) {
    throw std::invalid_argument("permutation degree is not twice the base vertex count");
  }
  for (std::size_t v = 0; v < base_count; ++v) {
    Point a = sigma(static_cast<Point>(v));
    Point b = sigma(static_cast<Point>(base_count + v));
    if (a % base_count != b % base_count) return false;
  }
  return true;
}

}  // namespace rwstab
