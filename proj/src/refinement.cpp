#include "rwstab/refinement.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ordered_partition.hpp"

namespace rwstab {

Coloring::Coloring(std::vector<std::uint32_t> color) : color_(std::move(color)) {
  std::vector<bool> used;
  for (auto c : color_) {
    if (c >= used.size()) used.resize(c + 1, false);
    used[c] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw std::invalid_argument("colouring does not use a contiguous range 0..k-1");
  }
  count_ = used.size();
}

Coloring Coloring::uniform(std::size_t vertex_count) {
  return Coloring(std::vector<std::uint32_t>(vertex_count, 0));
}

VertexPartition Coloring::cells() const {
  std::vector<std::vector<Vertex>> cells(count_);
  for (Vertex v = 0; v < color_.size(); ++v) cells[color_[v]].push_back(v);
  return VertexPartition(color_.size(), std::move(cells));
}

Coloring color_refinement(const Graph& g, const Coloring& init) {
  if (init.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("colouring covers " + std::to_string(init.vertex_count()) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  detail::OrderedPartition partition(init.values());
  detail::Trace trace;
  partition.refine(g, partition.cell_starts(), trace, std::nullopt);
  return Coloring(partition.colors());
}

namespace detail {

OrderedPartition::OrderedPartition(const std::vector<std::uint32_t>& colors)
    : lab_(colors.size()), pos_(colors.size()), start_(colors.size()), len_(colors.size(), 0) {
  for (Vertex v = 0; v < lab_.size(); ++v) lab_[v] = v;
  std::stable_sort(lab_.begin(), lab_.end(),
                   [&](Vertex x, Vertex y) { return colors[x] < colors[y]; });
  std::size_t i = 0;
  while (i < lab_.size()) {
    std::size_t j = i;
    while (j < lab_.size() && colors[lab_[j]] == colors[lab_[i]]) ++j;
    for (std::size_t k = i; k < j; ++k) {
      pos_[lab_[k]] = static_cast<std::uint32_t>(k);
      start_[lab_[k]] = static_cast<std::uint32_t>(i);
    }
    len_[i] = static_cast<std::uint32_t>(j - i);
    ++cells_;
    i = j;
  }
}

std::vector<std::uint32_t> OrderedPartition::cell_starts() const {
  std::vector<std::uint32_t> starts;
  for (std::size_t p = 0; p < lab_.size(); p += len_[p]) starts.push_back(static_cast<std::uint32_t>(p));
  return starts;
}

std::optional<std::size_t> OrderedPartition::target_cell() const {
  std::optional<std::size_t> best;
  for (std::size_t p = 0; p < lab_.size(); p += len_[p]) {
    if (len_[p] > 1 && (!best || len_[p] < len_[*best])) best = p;
  }
  return best;
}

std::vector<std::uint32_t> OrderedPartition::colors() const {
  std::vector<std::uint32_t> color(lab_.size());
  std::uint32_t index = 0;
  for (std::size_t p = 0; p < lab_.size(); p += len_[p], ++index) {
    for (std::size_t k = p; k < p + len_[p]; ++k) color[lab_[k]] = index;
  }
  return color;
}

bool OrderedPartition::individualize(const Graph& g, Vertex v, Trace& trace,
                                     std::optional<Clock::time_point> deadline) {
  const std::uint32_t s = start_[v];
  const std::uint32_t length = len_[s];
  trace.push(s);
  if (length == 1) return !trace.mismatch();
  // Move v to the front of its cell.
  Vertex first = lab_[s];
  std::uint32_t pv = pos_[v];
  lab_[s] = v;
  lab_[pv] = first;
  pos_[v] = s;
  pos_[first] = pv;
  len_[s] = 1;
  len_[s + 1] = length - 1;
  for (std::uint32_t k = s + 1; k < s + length; ++k) start_[lab_[k]] = s + 1;
  ++cells_;
  if (trace.mismatch()) return false;
  return refine(g, {s}, trace, deadline);
}

bool OrderedPartition::refine(const Graph& g, std::vector<std::uint32_t> splitters, Trace& trace,
                              std::optional<Clock::time_point> deadline) {
  const std::size_t n = lab_.size();
  thread_local std::vector<std::uint32_t> count;
  thread_local std::vector<char> queued;
  thread_local std::vector<Vertex> touched;
  thread_local std::vector<std::uint32_t> touched_cells;
  thread_local std::vector<Vertex> members;
  thread_local std::vector<Vertex> scratch;
  count.assign(n, 0);
  queued.assign(n, 0);

  std::deque<std::uint32_t> queue;
  for (auto s : splitters) {
    if (!queued[s]) {
      queued[s] = 1;
      queue.push_back(s);
    }
  }

  std::size_t rounds = 0;
  while (!queue.empty() && !discrete()) {
    if (deadline && (++rounds & 63) == 0 && Clock::now() > *deadline) throw SearchTimeout();
    const std::uint32_t s = queue.front();
    queue.pop_front();
    queued[s] = 0;

    members.assign(lab_.begin() + s, lab_.begin() + s + len_[s]);
    touched.clear();
    for (Vertex x : members) {
      for (Vertex w : g.neighbors(x)) {
        if (count[w]++ == 0) touched.push_back(w);
      }
    }
    touched_cells.clear();
    for (Vertex w : touched) {
      std::uint32_t c = start_[w];
      if (len_[c] > 1) touched_cells.push_back(c);
    }
    std::sort(touched_cells.begin(), touched_cells.end());
    touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()),
                        touched_cells.end());

    trace.push(s);
    trace.push(static_cast<std::uint32_t>(touched.size()));
    for (std::uint32_t c : touched_cells) {
      const std::uint32_t length = len_[c];
      scratch.assign(lab_.begin() + c, lab_.begin() + c + length);
      std::sort(scratch.begin(), scratch.end(), [&](Vertex x, Vertex y) {
        return count[x] != count[y] ? count[x] < count[y] : x < y;
      });
      if (count[scratch.front()] == count[scratch.back()]) continue;

      // Lay the cell out again, fragment by fragment in increasing count.
      const bool was_queued = queued[c] != 0;
      std::uint32_t largest_start = c;
      std::uint32_t largest_len = 0;
      std::vector<std::uint32_t> fragments;
      std::uint32_t k = 0;
      while (k < length) {
        std::uint32_t j = k;
        while (j < length && count[scratch[j]] == count[scratch[k]]) ++j;
        const std::uint32_t fs = c + k;
        for (std::uint32_t t = k; t < j; ++t) {
          lab_[c + t] = scratch[t];
          pos_[scratch[t]] = c + t;
          start_[scratch[t]] = fs;
        }
        len_[fs] = j - k;
        fragments.push_back(fs);
        trace.push(count[scratch[k]]);
        trace.push(j - k);
        if (j - k > largest_len) {
          largest_len = j - k;
          largest_start = fs;
        }
        k = j;
      }
      cells_ += fragments.size() - 1;
      for (std::uint32_t fs : fragments) {
        if (queued[fs]) continue;
        if (!was_queued && fs == largest_start) continue;
        queued[fs] = 1;
        queue.push_back(fs);
      }
      if (trace.mismatch()) break;
    }
    for (Vertex w : touched) count[w] = 0;
    if (trace.mismatch()) return false;
  }
  trace.push(static_cast<std::uint32_t>(cells_));
  return !trace.mismatch();
}

}  // namespace detail
}  // namespace rwstab
