#include "rwstab/families.hpp"

#include <algorithm>

#include "rwstab/automorphisms.hpp"
#include "rwstab/stability.hpp"

namespace rwstab {
namespace {

using Derived = std::map<std::string, long long>;

bool congruent(long long x, long long y, long long n) { return mod(x - y, n) == 0; }

bool plus_minus_one(long long x, long long n) { return congruent(x, 1, n) || congruent(x, -1, n); }

std::optional<Derived> row_w1(int n, int a, int) {
  if (n % 4) return std::nullopt;
  const int m = n / 4;
  if (a != 2 * m) return std::nullopt;
  return Derived{{"m", m}};
}

std::optional<Derived> row_w2(int n, int a, int r) {
  if (n % 2) return std::nullopt;
  const int m = n / 2;
  if (a != mod(m + 2, n) || r != mod(m + 1, n)) return std::nullopt;
  return Derived{{"m", m}};
}

std::optional<Derived> row_w3(int n, int a, int r) {
  if (n % 2 == 0 || n < 5 || r != 1) return std::nullopt;
  // 2 is invertible modulo odd m, so d is determined by a.
  const long long d = a % 2 == 0 ? a / 2 : (a + n) / 2;
  if (!plus_minus_one(d * d, n) || plus_minus_one(d, n)) return std::nullopt;
  return Derived{{"m", n}, {"d", d}};
}

std::optional<Derived> row_w4(int n, int a, int r) {
  if (n % 2) return std::nullopt;
  const int m = n / 2;
  if (r != mod(m - 1, n) || a == m) return std::nullopt;
  return Derived{{"m", m}};
}

std::optional<Derived> row_w5(int n, int a, int r) {
  if (n % 8) return std::nullopt;
  const int m = n / 8;
  if (r != 2 * m || a % 2) return std::nullopt;
  return Derived{{"m", m}};
}

std::optional<Derived> row_w6(int n, int a, int r) {
  if (n % 4) return std::nullopt;
  const int m = n / 4;
  if (a != m || m % 2 == 0 || r % 2 == 0 || m < 3) return std::nullopt;
  return Derived{{"m", m}};
}

std::optional<Derived> row_w7(int n, int a, int r) {
  if (n % 2) return std::nullopt;
  const int m = n / 2;
  if (a != m || r != mod(m - 1, n) || m % 2 == 0) return std::nullopt;
  return Derived{{"m", m}};
}

std::optional<Derived> row_w8(int n, int a, int r) {
  if (n % 2) return std::nullopt;
  const int m = n / 2;
  if (a != m || m % 2 == 0 || r % 2) return std::nullopt;
  const long long rr = static_cast<long long>(r) * r;
  if (!plus_minus_one(rr, m) || plus_minus_one(r, m)) return std::nullopt;
  return Derived{{"m", m}};
}

std::optional<Derived> row_w9(int n, int a, int r) {
  if (n % 2) return std::nullopt;
  const int m = n / 2;
  const long long s = mod(m - r, n);
  if (!congruent(s * s, 1, n) || !congruent(s * a, -a, n) || a >= m) return std::nullopt;
  return Derived{{"m", m}, {"s", s}};
}

}  // namespace

std::string_view to_string(Family f) {
  static constexpr std::string_view names[] = {"W1", "W2", "W3", "W4", "W5",
                                               "W6", "W7", "W8", "W9"};
  return names[static_cast<int>(f)];
}

std::string_view to_string(EdgeTransitiveFamily f) {
  static constexpr std::string_view names[] = {"ET_a", "ET_b", "ET_c", "ET_d"};
  return names[static_cast<int>(f)];
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : kAllFamilies)
    if (to_string(f) == text) return f;
  return std::nullopt;
}

std::optional<Derived> satisfies_row(Family f, const RoseWindowParams& p) {
  switch (f) {
    case Family::W1: return row_w1(p.n, p.a, p.r);
    case Family::W2: return row_w2(p.n, p.a, p.r);
    case Family::W3: return row_w3(p.n, p.a, p.r);
    case Family::W4: return row_w4(p.n, p.a, p.r);
    case Family::W5: return row_w5(p.n, p.a, p.r);
    case Family::W6: return row_w6(p.n, p.a, p.r);
    case Family::W7: return row_w7(p.n, p.a, p.r);
    case Family::W8: return row_w8(p.n, p.a, p.r);
    case Family::W9: return row_w9(p.n, p.a, p.r);
  }
  return std::nullopt;
}

std::vector<MembershipWitness> family_membership(const RoseWindowParams& p) {
  std::vector<MembershipWitness> out;
  for (const auto& q : iso_variants(p)) {
    for (Family f : kAllFamilies) {
      if (auto derived = satisfies_row(f, q)) out.push_back({f, q, std::move(*derived)});
    }
  }
  return out;
}

std::vector<Family> families_of(const std::vector<MembershipWitness>& witnesses) {
  std::vector<Family> out;
  for (const auto& w : witnesses) out.push_back(w.family);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Derived> satisfies_edge_transitive_row(EdgeTransitiveFamily f,
                                                     const RoseWindowParams& p) {
  const int n = p.n, a = p.a, r = p.r;
  switch (f) {
    case EdgeTransitiveFamily::ET_a:
      if (a == 2 && r == 1) return Derived{};
      return std::nullopt;
    case EdgeTransitiveFamily::ET_b: {
      if (n % 2) return std::nullopt;
      const int m = n / 2;
      if (a == mod(m - 2, n) && r == mod(m - 1, n)) return Derived{{"m", m}};
      return std::nullopt;
    }
    case EdgeTransitiveFamily::ET_c: {
      if (n % 12) return std::nullopt;
      const int m = n / 12;
      if ((a == 3 * m + 2 && r == 3 * m - 1) || (a == 3 * m - 2 && r == 3 * m + 1)) {
        return Derived{{"m", m}};
      }
      return std::nullopt;
    }
    case EdgeTransitiveFamily::ET_d: {
      if (n % 2 || a % 2) return std::nullopt;
      const int m = n / 2;
      const long long b = a / 2;
      if (!plus_minus_one(b * b, m) || r % 2 == 0) return std::nullopt;
      if (r != 1 && r != mod(m - 1, n)) return std::nullopt;
      return Derived{{"m", m}, {"b", b}};
    }
  }
  return std::nullopt;
}

std::optional<EdgeTransitiveMatch> edge_transitive_family(const RoseWindowParams& p) {
  const RoseWindowParams first = canonical_params(p);
  std::vector<RoseWindowParams> order{first};
  for (const auto& q : iso_variants(p))
    if (q != first) order.push_back(q);
  for (const auto& q : order) {
    for (auto f : {EdgeTransitiveFamily::ET_a, EdgeTransitiveFamily::ET_b,
                   EdgeTransitiveFamily::ET_c, EdgeTransitiveFamily::ET_d}) {
      if (auto derived = satisfies_edge_transitive_row(f, q)) {
        return EdgeTransitiveMatch{f, q, std::move(*derived)};
      }
    }
  }
  return std::nullopt;
}

std::string_view to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::none: return "none";
    case TheoremCase::odd: return "i";
    case TheoremCase::even_not_edge_transitive: return "ii";
    case TheoremCase::even_edge_transitive: return "iii";
  }
  return "?";
}

TheoremCase theorem_case(const RoseWindowParams& p, bool cover_edge_transitive) {
  if (p.n % 2) return TheoremCase::odd;
  return cover_edge_transitive ? TheoremCase::even_edge_transitive
                               : TheoremCase::even_not_edge_transitive;
}

std::vector<Family> predicted_families(TheoremCase c) {
  using enum Family;
  switch (c) {
    case TheoremCase::none: return {};
    case TheoremCase::odd: return {W3};
    case TheoremCase::even_not_edge_transitive: return {W1, W4, W5, W6, W7, W8, W9};
    case TheoremCase::even_edge_transitive: return {W2, W4};
  }
  return {};
}

OrderPropositions order_propositions_check(const RoseWindowParams& p, const PermGroup& aut,
                                           std::size_t edge_orbits) {
  OrderPropositions out;
  out.edge_orbits = edge_orbits;
  out.aut_order = aut.order();
  const long long n = p.n, a = p.a, r = p.r;
  const bool half_turn_spoke = congruent(2 * a, 0, n);
  if (edge_orbits == 3 && !half_turn_spoke) out.three_orbits_order = out.aut_order == 2 * n;
  if (edge_orbits == 2 && !half_turn_spoke) out.two_orbits_order = out.aut_order == 4 * n;
  if (edge_orbits != 1) {
    const bool arithmetic =
        congruent(r * r, 1, n) && (congruent(r * a, a, n) || congruent(r * a, -a, n));
    out.two_orbit_criterion = (edge_orbits == 2) == arithmetic;
  }
  return out;
}

OrderPropositions order_propositions_check(const RoseWindowParams& p) {
  Graph g = build(p);
  PermGroup aut = automorphism_group(g);
  return order_propositions_check(p, aut, edge_orbit_count(g, aut));
}

std::optional<bool> central_half_turn_check(const RoseWindowParams& p, const PermGroup& cover_aut,
                                            bool nontrivially_unstable,
                                            bool cover_edge_transitive) {
  if (p.n % 2 || !nontrivially_unstable || !cover_edge_transitive) return std::nullopt;
  return cover_aut.is_central(rho(p).pow(p.n / 2));
}

std::optional<bool> central_half_turn_check(const RoseWindowParams& p) {
  Graph g = build(p);
  Graph cover = build_cdc(p);
  PermGroup aut = automorphism_group(g);
  PermGroup cover_aut = automorphism_group(cover);
  auto cls = classify(g, aut, cover_aut);
  return central_half_turn_check(p, cover_aut, cls.kind == StabilityKind::nontrivially_unstable,
                                 edge_orbit_count(cover, cover_aut) == 1);
}

std::optional<ArcTransitivity> arc_transitivity_check(const RoseWindowParams& p,
                                                      const PermGroup& cover_aut,
                                                      bool cover_edge_transitive) {
  if (bipartite_by_params(p) || p.n <= 4 || !cover_edge_transitive) return std::nullopt;
  Graph cover = build_cdc(p);
  ArcTransitivity out;
  out.arc_transitive = is_s_arc_transitive(cover, cover_aut, 1);
  out.two_arc_transitive = is_s_arc_transitive(cover, cover_aut, 2);
  out.three_arc_transitive = is_s_arc_transitive(cover, cover_aut, 3);
  out.stabilizer_order = cover_aut.point_stabilizer_order(cdc_id(p, VertexKind::u, 0, 0));
  const BigInt& order = out.stabilizer_order;
  const bool power_of_two = order > 0 && (order & (order - 1)) == 0;
  const bool a4_or_s4 = order == 12 || order == 24;
  out.holds = !out.three_arc_transitive && (power_of_two || a4_or_s4);
  out.holds_sharp = out.arc_transitive && !out.three_arc_transitive &&
                    (out.two_arc_transitive ? a4_or_s4 : power_of_two);
  return out;
}

std::vector<MembershipWitness> literal_family_members(int n) {
  std::vector<MembershipWitness> out;
  for (int a = 1; a < n; ++a) {
    for (int r = 1; r < n; ++r) {
      const RoseWindowParams p{n, a, r};
      for (Family f : kAllFamilies) {
        if (auto derived = satisfies_row(f, p)) out.push_back({f, p, std::move(*derived)});
      }
    }
  }
  return out;
}

}  // namespace rwstab
