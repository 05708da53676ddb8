#include "rwstab/automorphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "ordered_partition.hpp"

namespace rwstab {
namespace {

using detail::Clock;
using detail::OrderedPartition;
using detail::Trace;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), failed_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex find(Vertex x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    failed_[a] = failed_[a] | failed_[b];
  }
  std::size_t size(Vertex x) { return size_[find(x)]; }
  bool failed(Vertex x) { return failed_[find(x)] != 0; }
  void mark_failed(Vertex x) { failed_[find(x)] = 1; }
  void clear_failed() { std::fill(failed_.begin(), failed_.end(), 0); }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
  std::vector<char> failed_;
};

struct PathNode {
  OrderedPartition partition;
  std::vector<std::uint32_t> trace;  // trace of the step that produced this node
  std::size_t target = 0;            // target cell start (non-leaf nodes)
  Vertex chosen = 0;                 // vertex individualized to reach the next node
};

std::vector<std::uint32_t> initial_colors(const Graph& g, const SearchOptions& options) {
  if (!options.initial_coloring) return std::vector<std::uint32_t>(g.vertex_count(), 0);
  if (options.initial_coloring->vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("initial colouring has the wrong vertex count");
  }
  return options.initial_coloring->values();
}

void check_deadline(const SearchOptions& options) {
  if (options.deadline && Clock::now() > *options.deadline) throw SearchTimeout();
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, const SearchOptions& options) : g_(g), options_(options) {}

  AutomorphismSearchResult run() {
    AutomorphismSearchResult result;
    const std::size_t n = g_.vertex_count();
    if (n == 0) return result;
    check_deadline(options_);

    OrderedPartition root(initial_colors(g_, options_));
    Trace root_trace;
    root.refine(g_, root.cell_starts(), root_trace, options_.deadline);
    path_.push_back({std::move(root), root_trace.release(), 0, 0});
    while (!path_.back().partition.discrete()) {
      PathNode& node = path_.back();
      node.target = *node.partition.target_cell();
      node.chosen = node.partition.at(node.target);
      OrderedPartition child = node.partition;
      Trace trace;
      child.individualize(g_, node.chosen, trace, options_.deadline);
      path_.push_back({std::move(child), trace.release(), 0, 0});
    }
    leaf_ = path_.back().partition.labeling();
    nodes_ = path_.size();

    UnionFind orbits(n);
    const std::size_t levels = path_.size() - 1;
    result.orbit_sizes.assign(levels, 1);
    for (std::size_t k = levels; k-- > 0;) {
      const PathNode& node = path_[k];
      const std::size_t target_len = node.partition.cell_length(node.target);
      // A failure only rules a vertex out at the level where it happened.
      orbits.clear_failed();
      for (std::size_t p = node.target; p < node.target + target_len; ++p) {
        const Vertex w = node.partition.at(p);
        if (orbits.find(w) == orbits.find(node.chosen) || orbits.failed(w)) continue;
        auto found = explore(k, node.partition, w);
        if (found) {
          for (Point x = 0; x < n; ++x) orbits.unite(x, (*found)(x));
          result.generators.push_back(std::move(*found));
        } else {
          orbits.mark_failed(w);
        }
      }
      result.orbit_sizes[k] = orbits.size(node.chosen);
    }
    for (std::size_t k = 0; k < levels; ++k) result.base.push_back(path_[k].chosen);
    result.tree_nodes = nodes_;
    return result;
  }

 private:
  // Searches the subtree below `parent` (a node at `depth` structurally equal
  // to the path node there) after individualizing w, for a leaf whose
  // labeling differs from the first leaf by an automorphism.
  std::optional<Permutation> explore(std::size_t depth, const OrderedPartition& parent, Vertex w) {
    if ((++nodes_ & 255) == 0) check_deadline(options_);
    OrderedPartition child = parent;
    Trace trace(&path_[depth + 1].trace);
    if (!child.individualize(g_, w, trace, options_.deadline) || !trace.matches_reference()) {
      return std::nullopt;
    }
    if (child.discrete()) {
      std::vector<Point> images(leaf_.size());
      for (std::size_t p = 0; p < leaf_.size(); ++p) images[leaf_[p]] = child.at(p);
      Permutation candidate(std::move(images));
      if (is_automorphism(g_, candidate)) return candidate;
      return std::nullopt;
    }
    const PathNode& next = path_[depth + 1];
    const std::size_t len = child.cell_length(next.target);
    for (std::size_t p = next.target; p < next.target + len; ++p) {
      if (auto found = explore(depth + 1, child, child.at(p))) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  const SearchOptions& options_;
  std::vector<PathNode> path_;
  std::vector<Vertex> leaf_;
  std::size_t nodes_ = 0;
};

constexpr std::uint32_t kSentinel = UINT32_MAX;

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, const SearchOptions& options,
                  const std::vector<Permutation>& generators)
      : g_(g), options_(options), generators_(generators) {}

  std::vector<Vertex> run() {
    check_deadline(options_);
    OrderedPartition root(initial_colors(g_, options_));
    Trace trace;
    root.refine(g_, root.cell_starts(), trace, options_.deadline);
    std::vector<std::uint32_t> key = trace.release();
    int state = compare_prefix(key, 0);
    if (state <= 0) {
      std::vector<Vertex> prefix;
      descend(root, key, state, prefix);
    }
    return best_labeling_;
  }

 private:
  // Compares key[from..] with the best key at the same positions, given the
  // prefix before `from` is equal. -1: smaller (new best below), 0: equal so
  // far, 1: larger (prune).
  int compare_prefix(const std::vector<std::uint32_t>& key, std::size_t from) const {
    if (!have_best_) return -1;
    for (std::size_t i = from; i < key.size(); ++i) {
      if (i >= best_key_.size()) return 1;
      if (key[i] != best_key_[i]) return key[i] < best_key_[i] ? -1 : 1;
    }
    return 0;
  }

  void descend(const OrderedPartition& node, std::vector<std::uint32_t>& key, int state,
               std::vector<Vertex>& prefix) {
    if ((++visited_ & 255) == 0) check_deadline(options_);
    if (node.discrete()) {
      const std::size_t before = key.size();
      key.push_back(kSentinel);
      for (auto [u, v] : relabeled_edges(node)) {
        key.push_back(u);
        key.push_back(v);
      }
      if (state < 0 || compare_prefix(key, before) < 0) {
        best_key_ = key;
        best_labeling_ = node.labeling();
        have_best_ = true;
      }
      key.resize(before);
      return;
    }

    const std::size_t target = *node.target_cell();
    const std::size_t len = node.cell_length(target);
    // Generators fixing the current prefix pointwise identify equivalent children.
    std::vector<const Permutation*> fixing;
    for (const auto& gen : generators_) {
      if (std::all_of(prefix.begin(), prefix.end(), [&](Vertex x) { return gen(x) == x; })) {
        fixing.push_back(&gen);
      }
    }
    std::vector<Vertex> cell(len);
    for (std::size_t p = 0; p < len; ++p) cell[p] = node.at(target + p);
    UnionFind uf(g_.vertex_count());
    for (const Permutation* gen : fixing) {
      for (Vertex x : cell) uf.unite(x, (*gen)(x));
    }
    std::set<Vertex> explored_roots;
    for (Vertex w : cell) {
      if (!explored_roots.insert(uf.find(w)).second) continue;
      OrderedPartition child = node;
      Trace trace;
      child.individualize(g_, w, trace, options_.deadline);
      const std::size_t before = key.size();
      const auto& step = trace.data();
      key.insert(key.end(), step.begin(), step.end());
      int child_state = state < 0 ? -1 : compare_prefix(key, before);
      if (child_state <= 0) {
        prefix.push_back(w);
        descend(child, key, child_state, prefix);
        prefix.pop_back();
      }
      key.resize(before);
      // A new best below a node that was equal so far makes later siblings
      // compare against the new key.
      if (state < 0 && have_best_) state = compare_prefix(key, 0);
    }
  }

  std::vector<Edge> relabeled_edges(const OrderedPartition& node) const {
    std::vector<Edge> edges;
    edges.reserve(g_.edge_count());
    for (auto [u, v] : g_.edges()) {
      auto pu = static_cast<Vertex>(node.position_of(u));
      auto pv = static_cast<Vertex>(node.position_of(v));
      edges.emplace_back(std::min(pu, pv), std::max(pu, pv));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
  }

  const Graph& g_;
  const SearchOptions& options_;
  const std::vector<Permutation>& generators_;
  std::vector<std::uint32_t> best_key_;
  std::vector<Vertex> best_labeling_;
  bool have_best_ = false;
  std::size_t visited_ = 0;
};

std::uint64_t digest_of(std::size_t n, const std::vector<Edge>& edges) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(n);
  for (auto [u, v] : edges) {
    mix(u);
    mix(v);
  }
  return h;
}

}  // namespace

AutomorphismSearchResult search_automorphisms(const Graph& g, const SearchOptions& options) {
  return AutomorphismSearch(g, options).run();
}

PermGroup automorphism_group(const Graph& g, const SearchOptions& options) {
  auto found = search_automorphisms(g, options);
  PermGroup group(g.vertex_count(), std::move(found.generators), found.base);
  BigInt expected = 1;
  for (auto s : found.orbit_sizes) expected *= s;
  if (group.order() != expected) {
    throw std::logic_error("automorphism search and stabilizer chain disagree on |Aut|");
  }
  return group;
}

CanonicalLabeling canonical_labeling(const Graph& g, const SearchOptions& options) {
  CanonicalLabeling result;
  const std::size_t n = g.vertex_count();
  result.form.vertex_count = n;
  if (n == 0) {
    result.form.digest = digest_of(0, {});
    return result;
  }
  auto automorphisms = search_automorphisms(g, options);
  auto labeling = CanonicalSearch(g, options, automorphisms.generators).run();
  result.position_of.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) result.position_of[labeling[p]] = static_cast<Vertex>(p);
  for (auto [u, v] : g.edges()) {
    Vertex pu = result.position_of[u];
    Vertex pv = result.position_of[v];
    result.form.edges.emplace_back(std::min(pu, pv), std::max(pu, pv));
  }
  std::sort(result.form.edges.begin(), result.form.edges.end());
  result.form.digest = digest_of(n, result.form.edges);
  return result;
}

CanonicalForm canonical_form(const Graph& g, const SearchOptions& options) {
  return canonical_labeling(g, options).form;
}

std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  auto c1 = canonical_labeling(g1);
  auto c2 = canonical_labeling(g2);
  if (!(c1.form == c2.form)) return std::nullopt;
  const std::size_t n = g1.vertex_count();
  std::vector<Vertex> at_position(n);
  for (Vertex v = 0; v < n; ++v) at_position[c2.position_of[v]] = v;
  std::vector<Point> images(n);
  for (Vertex v = 0; v < n; ++v) images[v] = at_position[c1.position_of[v]];
  Permutation map(std::move(images));
  for (auto [u, v] : g1.edges()) {
    if (!g2.adjacent(map(u), map(v))) {
      throw std::logic_error("canonical forms agree but the induced map is not an isomorphism");
    }
  }
  return map;
}

std::vector<std::vector<std::size_t>> edge_orbits(const Graph& g, const PermGroup& aut) {
  if (aut.degree() != g.vertex_count()) {
    throw std::invalid_argument("group degree differs from the vertex count");
  }
  const auto& edges = g.edges();
  auto index_of = [&](Vertex u, Vertex v) {
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return SIZE_MAX;
    return static_cast<std::size_t>(it - edges.begin());
  };
  std::vector<std::size_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : aut.generators()) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::size_t j = index_of(gen(edges[i].first), gen(edges[i].second));
      if (j == SIZE_MAX) throw std::invalid_argument("generator is not an automorphism");
      std::size_t a = find(i);
      std::size_t b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < edges.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> result;
  for (auto& [root, members] : groups) result.push_back(std::move(members));
  return result;
}

std::size_t edge_orbit_count(const Graph& g, const PermGroup& aut) {
  return edge_orbits(g, aut).size();
}

namespace {

void for_each_s_arc(const Graph& g, int s, std::vector<Vertex>& arc,
                    const std::function<void(const std::vector<Vertex>&)>& visit) {
  if (static_cast<int>(arc.size()) == s + 1) {
    visit(arc);
    return;
  }
  for (Vertex w : g.neighbors(arc.back())) {
    if (arc.size() >= 2 && w == arc[arc.size() - 2]) continue;
    arc.push_back(w);
    for_each_s_arc(g, s, arc, visit);
    arc.pop_back();
  }
}

}  // namespace

std::size_t s_arc_count(const Graph& g, int s) {
  std::size_t count = 0;
  std::vector<Vertex> arc;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    arc.assign(1, v);
    for_each_s_arc(g, s, arc, [&](const std::vector<Vertex>&) { ++count; });
  }
  return count;
}

bool is_s_arc_transitive(const Graph& g, const PermGroup& aut, int s) {
  if (s < 1) throw std::invalid_argument("s-arc transitivity needs s >= 1");
  if (g.vertex_count() == 0 || !is_connected(g)) {
    throw std::invalid_argument("s-arc transitivity is only defined here for connected graphs");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) throw std::invalid_argument("graph has an isolated vertex");
  }
  if (aut.degree() != g.vertex_count()) {
    throw std::invalid_argument("group degree differs from the vertex count");
  }
  std::size_t total = 0;
  std::vector<Vertex> first;
  std::vector<Vertex> arc;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    arc.assign(1, v);
    for_each_s_arc(g, s, arc, [&](const std::vector<Vertex>& a) {
      if (total++ == 0) first = a;
    });
  }
  if (total == 0) return true;

  std::set<std::vector<Vertex>> orbit{first};
  std::vector<std::vector<Vertex>> frontier{first};
  while (!frontier.empty() && orbit.size() < total) {
    std::vector<std::vector<Vertex>> next;
    for (const auto& arc : frontier) {
      for (const auto& gen : aut.generators()) {
        std::vector<Vertex> image(arc.size());
        for (std::size_t i = 0; i < arc.size(); ++i) image[i] = gen(arc[i]);
        if (orbit.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  return orbit.size() == total;
}

}  // namespace rwstab
