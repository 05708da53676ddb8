#include "rwstab/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace rwstab {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::span<const Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw std::invalid_argument("generator of degree " + std::to_string(g.degree()) +
                                  " in a group of degree " + std::to_string(degree_));
    }
  }
  for (Point b : base_prefix) {
    if (b >= degree_) throw std::invalid_argument("base point out of range");
    bool fresh = std::none_of(levels_.begin(), levels_.end(),
                              [b](const Level& l) { return l.base_point == b; });
    if (fresh) append_level(b);
  }
  for (const auto& g : generators_) {
    auto [residue, level] = sift(g);
    if (!residue.is_identity()) add_strong_generator(std::move(residue), level);
  }
  if (!strong_.empty()) {
    random_phase();
    verify_phase();
  }
  order_ = 1;
  for (const auto& level : levels_) order_ *= level.orbit.size();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& level : levels_) b.push_back(level.base_point);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& level : levels_) sizes.push_back(level.orbit.size());
  return sizes;
}

void PermGroup::append_level(Point base_point) {
  Level level;
  level.base_point = base_point;
  rebuild_level(level);
  levels_.push_back(std::move(level));
}

void PermGroup::rebuild_level(Level& level) {
  level.slot.assign(degree_, -1);
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.inverse_transversal.assign(1, Permutation::identity(degree_));
  level.slot[level.base_point] = 0;
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const Point beta = level.orbit[head];
    for (std::size_t id : level.generator_ids) {
      const Permutation& s = strong_[id];
      Point image = s(beta);
      if (level.slot[image] != -1) continue;
      level.slot[image] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(image);
      Permutation rep = compose(s, level.transversal[head]);
      level.inverse_transversal.push_back(rep.inverse());
      level.transversal.push_back(std::move(rep));
    }
  }
}

PermGroup::SiftResult PermGroup::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    int k = level.slot[g(level.base_point)];
    if (k < 0) return {std::move(g), i};
    if (k > 0) g = compose(level.inverse_transversal[static_cast<std::size_t>(k)], g);
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::add_strong_generator(Permutation h, std::size_t stop_level) {
  if (stop_level == levels_.size()) append_level(h.first_moved());
  std::size_t id = strong_.size();
  strong_.push_back(std::move(h));
  for (std::size_t i = 0; i <= stop_level; ++i) {
    levels_[i].generator_ids.push_back(id);
    rebuild_level(levels_[i]);
  }
}

void PermGroup::random_phase() {
  std::mt19937_64 rng(0x5eedULL);
  std::vector<Permutation> state(generators_.begin(), generators_.end());
  while (state.size() < 10) state.push_back(state[state.size() % generators_.size()]);
  Permutation accumulator = Permutation::identity(degree_);
  auto step = [&] {
    std::uniform_int_distribution<std::size_t> pick(0, state.size() - 1);
    std::size_t s = pick(rng);
    std::size_t t = pick(rng);
    while (t == s) t = pick(rng);
    state[s] = (rng() & 1) ? compose(state[s], state[t]) : compose(state[s], state[t].inverse());
    accumulator = compose(accumulator, state[s]);
  };
  for (int i = 0; i < 40; ++i) step();

  int quiet = 0;
  while (quiet < 24) {
    step();
    auto [residue, level] = sift(accumulator);
    if (residue.is_identity()) {
      ++quiet;
    } else {
      add_strong_generator(std::move(residue), level);
      quiet = 0;
    }
  }
}

void PermGroup::verify_phase() {
  // Schreier's lemma: level i is complete once every u_{s(b)}^{-1} s u_b
  // sifts to the identity through the levels below it.
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t k = 0; k < levels_[i].orbit.size() && !restarted; ++k) {
      for (std::size_t g = 0; g < levels_[i].generator_ids.size(); ++g) {
        const Level& level = levels_[i];
        const Permutation& s = strong_[level.generator_ids[g]];
        Point image = s(level.orbit[k]);
        auto target = static_cast<std::size_t>(level.slot[image]);
        Permutation schreier =
            compose(level.inverse_transversal[target], compose(s, level.transversal[k]));
        auto [residue, stop] = sift(std::move(schreier), i + 1);
        if (!residue.is_identity()) {
          add_strong_generator(std::move(residue), stop);
          // Levels above `stop` were untouched; re-verify from `stop` down.
          i = stop + 1;
          restarted = true;
          break;
        }
      }
    }
  }
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw std::invalid_argument("membership test for a permutation of degree " +
                                std::to_string(p.degree()) + " in a group of degree " +
                                std::to_string(degree_));
  }
  auto [residue, level] = sift(p);
  return level == levels_.size() && residue.is_identity();
}

VertexPartition PermGroup::orbits() const {
  std::vector<Point> parent(degree_);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators_) {
    for (Point x = 0; x < degree_; ++x) {
      Point a = find(x);
      Point b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Vertex>> cells;
  std::vector<int> cell_index(degree_, -1);
  for (Point x = 0; x < degree_; ++x) {
    Point root = find(x);
    if (cell_index[root] < 0) {
      cell_index[root] = static_cast<int>(cells.size());
      cells.emplace_back();
    }
    cells[static_cast<std::size_t>(cell_index[root])].push_back(x);
  }
  return VertexPartition(degree_, std::move(cells));
}

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_) throw std::invalid_argument("orbit of an out-of-range point");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> result{x};
  seen[x] = true;
  for (std::size_t head = 0; head < result.size(); ++head) {
    for (const auto& g : generators_) {
      Point y = g(result[head]);
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

BigInt PermGroup::point_stabilizer_order(Point v) const {
  return order_ / orbit(v).size();
}

bool PermGroup::is_central(const Permutation& p) const {
  if (!contains(p)) throw std::invalid_argument("centrality asked for a non-member");
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return commute(g, p); });
}

}  // namespace rwstab
