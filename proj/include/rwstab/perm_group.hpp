#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "rwstab/graph.hpp"
#include "rwstab/permutation.hpp"

namespace rwstab {

using BigInt = boost::multiprecision::cpp_int;

/// Permutation group given by generators, backed by a base and strong
/// generating set.
///
/// The stabilizer chain is built by sifting random subproducts of the
/// generators and is then completed deterministically by sifting every
/// Schreier generator, so order() and contains() are exact. Base points are
/// taken from `base_prefix` first and afterwards as the smallest point moved
/// by the element that forced a new level. The random source is seeded with a
/// fixed value, so the chain is reproducible.
class PermGroup {
 public:
  PermGroup() = default;

  /// Throws std::invalid_argument if a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::span<const Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<Point> base() const;

  /// Fundamental orbit sizes along the chain.
  std::vector<std::size_t> basic_orbit_sizes() const;

  const BigInt& order() const { return order_; }

  /// Membership by sifting. Throws on degree mismatch.
  bool contains(const Permutation& p) const;

  /// Orbit partition, cells sorted and ordered by their smallest point.
  VertexPartition orbits() const;
  std::vector<Point> orbit(Point x) const;

  /// |G_v| = |G| / |orbit(v)|.
  BigInt point_stabilizer_order(Point v) const;

  /// Whether p commutes with every generator. p must be a member; a
  /// non-member throws std::invalid_argument.
  bool is_central(const Permutation& p) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<std::size_t> generator_ids;  // into strong_
    std::vector<int> slot;                   // point -> index into orbit, or -1
    std::vector<Point> orbit;
    std::vector<Permutation> transversal;    // transversal[k](base_point) == orbit[k]
    std::vector<Permutation> inverse_transversal;
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting stopped; levels_.size() if none
  };

  SiftResult sift(Permutation g, std::size_t from_level = 0) const;
  void add_strong_generator(Permutation h, std::size_t stop_level);
  void rebuild_level(Level& level);
  void append_level(Point base_point);
  void random_phase();
  void verify_phase();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

}  // namespace rwstab
