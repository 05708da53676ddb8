#include "rwstab/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace rwstab {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || hit[x]) {
      throw std::invalid_argument("image list is not a bijection");
    }
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
  return p;
}

namespace {

std::vector<Point> parse_points(std::string_view body) {
  std::vector<Point> points;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (body[i] == ' ' || body[i] == ',' || body[i] == '\t')) ++i;
    if (i == body.size()) break;
    Point value = 0;
    auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), value);
    if (ec != std::errc{}) {
      throw std::invalid_argument("malformed point in permutation '" + std::string(body) + "'");
    }
    points.push_back(value);
    i = static_cast<std::size_t>(ptr - body.data());
  }
  return points;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) throw std::invalid_argument("empty permutation text");
  text.remove_prefix(first);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);

  if (text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unterminated image list");
    Permutation p(parse_points(text.substr(1, text.size() - 2)));
    if (degree != 0 && p.degree() != degree) {
      throw std::invalid_argument("image list has wrong degree");
    }
    return p;
  }

  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
    auto cycle = parse_points(text.substr(i + 1, close - i - 1));
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point x = cycle[k];
      if (x >= degree || used[x]) throw std::invalid_argument("bad point in cycle notation");
      used[x] = true;
      p.images_[x] = cycle[(k + 1) % cycle.size()];
    }
    i = close + 1;
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) q.images_[images_[i]] = static_cast<Point>(i);
  return q;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(degree());
  while (e) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

Point Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) out << (i ? " " : "") << images_[i];
  out << ']';
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("composing permutations of degree " + std::to_string(p.degree()) +
                                " and " + std::to_string(q.degree()));
  }
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < r.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

bool commute(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in commute");
  for (Point i = 0; i < p.degree(); ++i) {
    if (p(q(i)) != q(p(i))) return false;
  }
  return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(p(u), p(v))) return false;
  }
  return true;
}

}  // namespace rwstab
