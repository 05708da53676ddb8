#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rwstab/graph.hpp"

namespace rwstab {

/// Vertex colouring with colours 0..k-1, all used.
class Coloring {
 public:
  Coloring() = default;
  /// Throws std::invalid_argument unless the values form a contiguous range
  /// starting at 0.
  explicit Coloring(std::vector<std::uint32_t> color);
  static Coloring uniform(std::size_t vertex_count);

  std::size_t vertex_count() const { return color_.size(); }
  std::size_t color_count() const { return count_; }
  std::uint32_t operator[](Vertex v) const { return color_[v]; }
  const std::vector<std::uint32_t>& values() const { return color_; }

  /// Vertices grouped by colour, colour order.
  VertexPartition cells() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::uint32_t> color_;
  std::size_t count_ = 0;
};

/// One-dimensional Weisfeiler-Leman: the coarsest equitable refinement of
/// `init` (equal colours imply equal neighbour-colour multisets). Cells of
/// `init` are only ever split, and the result is canonical: relabeling the
/// graph relabels the output the same way.
Coloring color_refinement(const Graph& g, const Coloring& init);

/// Raised by the search routines when their deadline passes.
class SearchTimeout : public std::runtime_error {
 public:
  SearchTimeout() : std::runtime_error("automorphism search timed out") {}
};

}  // namespace rwstab
