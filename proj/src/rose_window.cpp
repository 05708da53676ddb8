#include "rwstab/rose_window.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "rwstab/automorphisms.hpp"
#include "rwstab/double_cover.hpp"

namespace rwstab {

RoseWindowParams RoseWindowParams::make(long long n, long long a, long long r) {
  if (n < 3) throw std::invalid_argument("n must be at least 3, got " + std::to_string(n));
  RoseWindowParams p{static_cast<int>(n), mod(a, n), mod(r, n)};
  if (p.a == 0) throw std::invalid_argument("a must be non-zero modulo n");
  if (p.r == 0) throw std::invalid_argument("r must be non-zero modulo n");
  return p;
}

RoseWindowParams RoseWindowParams::parse(std::string_view text) {
  long long values[3];
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    std::size_t end = k < 2 ? text.find(':', pos) : text.size();
    if (end == std::string_view::npos) break;
    auto piece = text.substr(pos, end - pos);
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), values[k]);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) break;
    if (k == 2) return make(values[0], values[1], values[2]);
    pos = end + 1;
  }
  throw std::invalid_argument("expected parameters in the form n:a:r, got '" +
                              std::string(text) + "'");
}

std::string RoseWindowParams::to_string() const {
  return std::to_string(n) + ":" + std::to_string(a) + ":" + std::to_string(r);
}

Vertex base_id(const RoseWindowParams& p, VertexKind kind, int i) {
  return static_cast<Vertex>((kind == VertexKind::u ? 0 : p.n) + mod(i, p.n));
}

Vertex cdc_id(const RoseWindowParams& p, VertexKind kind, int i, int j) {
  return static_cast<Vertex>(mod(j, 2) * 2 * p.n) + base_id(p, kind, i);
}

VertexName base_name(const RoseWindowParams& p, Vertex id) {
  const auto n = static_cast<Vertex>(p.n);
  if (id >= 2 * n) throw std::invalid_argument("vertex id out of range");
  return {id < n ? VertexKind::u : VertexKind::v, static_cast<int>(id % n), std::nullopt};
}

VertexName cdc_name(const RoseWindowParams& p, Vertex id) {
  const auto n = static_cast<Vertex>(p.n);
  if (id >= 4 * n) throw std::invalid_argument("vertex id out of range");
  VertexName name = base_name(p, id % (2 * n));
  name.layer = static_cast<int>(id / (2 * n));
  return name;
}

std::string label(const VertexName& name) {
  std::string out(1, name.kind == VertexKind::u ? 'u' : 'v');
  out += "[" + std::to_string(name.i);
  if (name.layer) out += "," + std::to_string(*name.layer);
  return out + "]";
}

Graph build(const RoseWindowParams& p) {
  using enum VertexKind;
  std::vector<Edge> edges;
  edges.reserve(4 * p.n);
  for (int i = 0; i < p.n; ++i) {
    edges.emplace_back(base_id(p, u, i), base_id(p, u, i + 1));
    edges.emplace_back(base_id(p, v, i), base_id(p, v, i + p.r));
    edges.emplace_back(base_id(p, u, i), base_id(p, v, i));
    edges.emplace_back(base_id(p, u, i + p.a), base_id(p, v, i));
  }
  return Graph(2 * p.n, edges);
}

bool is_degenerate(const RoseWindowParams& p) { return mod(2 * p.r, p.n) == 0; }

Graph build_cdc(const RoseWindowParams& p) {
  using enum VertexKind;
  std::vector<Edge> edges;
  edges.reserve(8 * p.n);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < p.n; ++i) {
      edges.emplace_back(cdc_id(p, u, i, j), cdc_id(p, u, i + 1, j + 1));
      edges.emplace_back(cdc_id(p, v, i, j), cdc_id(p, v, i + p.r, j + 1));
      edges.emplace_back(cdc_id(p, u, i, j), cdc_id(p, v, i, j + 1));
      edges.emplace_back(cdc_id(p, u, i + p.a, j), cdc_id(p, v, i, j + 1));
    }
  }
  return Graph(4 * p.n, edges);
}

std::vector<RoseWindowParams> iso_variants(const RoseWindowParams& p) {
  std::vector<RoseWindowParams> out;
  for (auto [sa, sr] : {std::pair{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}) {
    auto q = RoseWindowParams::make(p.n, sa * p.a, sr * p.r);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

RoseWindowParams canonical_params(const RoseWindowParams& p) {
  return {p.n, std::min(p.a, p.n - p.a), std::min(p.r, p.n - p.r)};
}

bool is_canonical(const RoseWindowParams& p) { return 2 * p.a <= p.n && 2 * p.r <= p.n; }

namespace {

enum class EdgeClass { rim, hub, spoke };

Graph cdc_edge_class(const RoseWindowParams& p, EdgeClass which) {
  using enum VertexKind;
  std::vector<Edge> edges;
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < p.n; ++i) {
      switch (which) {
        case EdgeClass::rim:
          edges.emplace_back(cdc_id(p, u, i, j), cdc_id(p, u, i + 1, j + 1));
          break;
        case EdgeClass::hub:
          edges.emplace_back(cdc_id(p, v, i, j), cdc_id(p, v, i + p.r, j + 1));
          break;
        case EdgeClass::spoke:
          edges.emplace_back(cdc_id(p, u, i, j), cdc_id(p, v, i, j + 1));
          edges.emplace_back(cdc_id(p, u, i + p.a, j), cdc_id(p, v, i, j + 1));
          break;
      }
    }
  }
  return Graph(4 * p.n, edges);
}

// Components with at least one edge, each walked from its smallest vertex
// towards that vertex's smaller neighbour. Every such component must be a
// cycle or a single edge.
std::vector<std::vector<Vertex>> walk_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& component : connected_components(g)) {
    if (component.size() == 1) continue;
    if (component.size() == 2) {
      out.push_back(component);
      continue;
    }
    std::vector<Vertex> walk{component.front()};
    Vertex previous = component.front();
    Vertex current = g.neighbors(previous).front();
    while (current != component.front()) {
      if (g.degree(current) != 2) throw std::logic_error("edge class is not a union of cycles");
      walk.push_back(current);
      auto nb = g.neighbors(current);
      Vertex next = nb[0] == previous ? nb[1] : nb[0];
      previous = current;
      current = next;
    }
    if (walk.size() != component.size()) throw std::logic_error("edge class is not a union of cycles");
    out.push_back(std::move(walk));
  }
  return out;
}

}  // namespace

CdcStructure cdc_structure(const RoseWindowParams& p) {
  CdcStructure s;
  s.rim_cycles = walk_components(cdc_edge_class(p, EdgeClass::rim));
  s.hub_components = walk_components(cdc_edge_class(p, EdgeClass::hub));
  s.spoke_cycles = walk_components(cdc_edge_class(p, EdgeClass::spoke));
  s.hub_is_matching = is_degenerate(p);
  if (p.n % 2 == 0) {
    std::array<std::vector<Vertex>, 4> cells;
    for (Vertex id = 0; id < static_cast<Vertex>(4 * p.n); ++id) {
      VertexName name = cdc_name(p, id);
      const bool same_parity = name.i % 2 == *name.layer;
      const int cell = (name.kind == VertexKind::u ? 0 : 2) + (same_parity ? 0 : 1);
      cells[cell].push_back(id);
    }
    s.s_partition = std::move(cells);
  }
  return s;
}

CycleLengths predicted_cycle_lengths(const RoseWindowParams& p) {
  if (is_degenerate(p)) {
    throw std::invalid_argument("hub cycle length is undefined when 2r = 0 mod n");
  }
  const int g = std::gcd(p.r, p.n);
  const int epsilon = (p.n / g) % 2 == 0 ? 0 : 1;
  return {(1 << epsilon) * p.n / g, 2 * p.n / std::gcd(p.a, p.n)};
}

bool bipartite_by_params(const RoseWindowParams& p) {
  return p.n % 2 == 0 && p.a % 2 == 0 && p.r % 2 == 1;
}

namespace {

template <class F>
Permutation cover_permutation(const RoseWindowParams& p, F&& image) {
  std::vector<Point> images(4 * p.n);
  for (Vertex id = 0; id < images.size(); ++id) {
    VertexName x = image(cdc_name(p, id));
    images[id] = cdc_id(p, x.kind, x.i, *x.layer);
  }
  Permutation sigma(std::move(images));
  if (!is_automorphism(build_cdc(p), sigma)) {
    throw std::logic_error("constructed permutation is not a cover automorphism");
  }
  return sigma;
}

}  // namespace

Permutation rho(const RoseWindowParams& p) {
  return cover_permutation(p, [](VertexName x) {
    x.i += 1;
    return x;
  });
}

Permutation mu(const RoseWindowParams& p) {
  return cover_permutation(p, [&](VertexName x) {
    x.i = x.kind == VertexKind::u ? -x.i : -x.i - p.a;
    return x;
  });
}

Permutation beta(const RoseWindowParams& p) {
  return cover_permutation(p, [](VertexName x) {
    x.layer = 1 - *x.layer;
    return x;
  });
}

PermGroup expected_group(const RoseWindowParams& p) {
  return expected_group(automorphism_group(build(p)));
}

bool is_expected(const RoseWindowParams& p, const Permutation& sigma) {
  if (bipartite_by_params(p)) {
    throw std::invalid_argument("expectedness criteria need a non-bipartite base graph");
  }
  if (sigma.degree() != static_cast<std::size_t>(4 * p.n) || !is_automorphism(build_cdc(p), sigma)) {
    throw std::invalid_argument("permutation is not an automorphism of the cover");
  }
  const bool by_fibers = preserves_fibers(sigma, 2 * p.n);
  const bool by_commuting = commute(sigma, beta(p));
  if (by_fibers != by_commuting) {
    throw std::logic_error("fiber and commutation criteria disagree for " + p.to_string());
  }
  return by_fibers;
}

OddCoverRewrite odd_n_cdc_params(const RoseWindowParams& p) {
  if (p.n % 2 == 0) throw std::invalid_argument("rewriting the cover needs odd n");
  const int n = p.n;
  // theta(i, j) is the residue mod 2n that is i mod n and j mod 2.
  auto theta = [n](int i, int j) {
    int x = mod(i, n);
    return x % 2 == mod(j, 2) ? x : x + n;
  };
  OddCoverRewrite out{RoseWindowParams::make(2 * n, theta(p.a, 0), theta(p.r, 1)), {}};
  std::vector<Point> images(4 * n);
  for (Vertex id = 0; id < images.size(); ++id) {
    VertexName x = cdc_name(p, id);
    int t = theta(x.i, *x.layer);
    images[id] = x.kind == VertexKind::u ? base_id(out.target, VertexKind::u, t)
                                         : base_id(out.target, VertexKind::v, t + n);
  }
  out.map = Permutation(std::move(images));
  if (relabel(build_cdc(p), out.map.images()) != build(out.target)) {
    throw std::logic_error("odd cover map is not an isomorphism for " + p.to_string());
  }
  return out;
}

QuotientReduction quotient_params(const RoseWindowParams& p, int h) {
  if (h < 1 || p.n % h != 0) {
    throw std::invalid_argument(std::to_string(h) + " does not divide " + std::to_string(p.n));
  }
  const int k = p.n / h;
  if (k < 3) throw std::invalid_argument("quotient would have k = " + std::to_string(k) + " < 3");
  if (p.a % k == 0) throw std::invalid_argument("a reduces to 0 modulo " + std::to_string(k));
  if (p.r % k == 0) throw std::invalid_argument("r reduces to 0 modulo " + std::to_string(k));
  QuotientReduction out{RoseWindowParams::make(k, p.a, p.r), {}};
  std::vector<std::vector<Vertex>> cells(4 * k);
  for (Vertex id = 0; id < static_cast<Vertex>(4 * p.n); ++id) {
    VertexName x = cdc_name(p, id);
    cells[cdc_id(out.params, x.kind, x.i, *x.layer)].push_back(id);
  }
  out.cells = VertexPartition(4 * p.n, std::move(cells));
  return out;
}

}  // namespace rwstab
