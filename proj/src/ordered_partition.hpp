#pragma once

// Ordered partitions and equitable refinement shared by the colour
// refinement entry point and the individualization-refinement search.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "rwstab/graph.hpp"
#include "rwstab/refinement.hpp"

namespace rwstab::detail {

using Clock = std::chrono::steady_clock;

/// Refinement trace: an isomorphism-invariant record of every split.
/// With a reference attached, recording stops at the first divergence so a
/// refinement can be abandoned as soon as it cannot match.
class Trace {
 public:
  explicit Trace(const std::vector<std::uint32_t>* reference = nullptr) : reference_(reference) {}

  void push(std::uint32_t value) {
    if (mismatch_) return;
    if (reference_ &&
        (data_.size() >= reference_->size() || (*reference_)[data_.size()] != value)) {
      mismatch_ = true;
      return;
    }
    data_.push_back(value);
  }
  bool mismatch() const { return mismatch_; }
  /// A matching trace must also have the reference's full length.
  bool matches_reference() const {
    return !mismatch_ && (!reference_ || data_.size() == reference_->size());
  }
  const std::vector<std::uint32_t>& data() const { return data_; }
  std::vector<std::uint32_t> release() { return std::move(data_); }

 private:
  const std::vector<std::uint32_t>* reference_;
  std::vector<std::uint32_t> data_;
  bool mismatch_ = false;
};

class OrderedPartition {
 public:
  /// Cells formed by equal colour values, ordered by colour.
  OrderedPartition(const std::vector<std::uint32_t>& colors);

  std::size_t size() const { return lab_.size(); }
  std::size_t cell_count() const { return cells_; }
  bool discrete() const { return cells_ == lab_.size(); }

  Vertex at(std::size_t position) const { return lab_[position]; }
  std::size_t position_of(Vertex v) const { return pos_[v]; }
  std::size_t cell_start(Vertex v) const { return start_[v]; }
  /// Length of the cell beginning at `start` (only meaningful at a start).
  std::size_t cell_length(std::size_t start) const { return len_[start]; }
  const std::vector<Vertex>& labeling() const { return lab_; }

  /// Starts of all cells in position order.
  std::vector<std::uint32_t> cell_starts() const;

  /// First cell of minimum size > 1; nullopt when discrete.
  std::optional<std::size_t> target_cell() const;

  /// Splits v off its cell as a singleton placed first and refines.
  /// Returns false when `trace` diverges from its reference.
  bool individualize(const Graph& g, Vertex v, Trace& trace,
                     std::optional<Clock::time_point> deadline);

  /// Refines to the coarsest equitable partition finer than the current one,
  /// using the given cells as initial splitters.
  bool refine(const Graph& g, std::vector<std::uint32_t> splitters, Trace& trace,
              std::optional<Clock::time_point> deadline);

  /// Colour per vertex: index of its cell in position order.
  std::vector<std::uint32_t> colors() const;

 private:
  std::vector<Vertex> lab_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> len_;
  std::size_t cells_ = 0;
};

}  // namespace rwstab::detail
