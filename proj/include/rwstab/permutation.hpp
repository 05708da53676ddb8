#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rwstab/graph.hpp"

namespace rwstab {

using Point = std::uint32_t;

/// Bijection of {0..degree-1} in image form: p(i) = images()[i].
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Accepts the one-line form "[2 0 1]" or cycle notation "(0 1 2)(3 4)";
  /// cycle notation needs the degree, which must cover every listed point.
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  /// Smallest point with p(i) != i, or degree() for the identity.
  Point first_moved() const;

  /// One-line form "[i0 i1 ...]".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);
  std::vector<Point> images_;
};

/// (p∘q)(i) = p(q(i)). Throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

bool commute(const Permutation& p, const Permutation& q);

/// True iff p maps the edge set of g onto itself.
bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace rwstab
