#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rwstab/perm_group.hpp"
#include "rwstab/rose_window.hpp"

namespace rwstab {

/// The nine parameter families W1..W9 of unstable Rose Window graphs.
enum class Family { W1, W2, W3, W4, W5, W6, W7, W8, W9 };
inline constexpr Family kAllFamilies[] = {Family::W1, Family::W2, Family::W3,
                                         Family::W4, Family::W5, Family::W6,
                                         Family::W7, Family::W8, Family::W9};

/// Edge-transitive Rose Window families (a)-(d).
enum class EdgeTransitiveFamily { ET_a, ET_b, ET_c, ET_d };

std::string_view to_string(Family f);
std::string_view to_string(EdgeTransitiveFamily f);
std::optional<Family> parse_family(std::string_view text);

struct MembershipWitness {
  Family family = Family::W1;
  /// The sign variant that satisfies the row literally.
  RoseWindowParams matched_params;
  /// Row parameters recovered from the triple (m, d, s as applicable).
  std::map<std::string, long long> derived;

  friend bool operator==(const MembershipWitness&, const MembershipWitness&) = default;
};

/// Whether (n, a, r) satisfies the row of `f` as written, without sign flips.
/// Returns the derived row parameters when it does.
std::optional<std::map<std::string, long long>> satisfies_row(Family f, const RoseWindowParams& p);

/// Every (variant, family) pair whose row holds, variants in iso_variants
/// order and families in row order.
std::vector<MembershipWitness> family_membership(const RoseWindowParams& p);

/// Distinct families among the witnesses, in row order.
std::vector<Family> families_of(const std::vector<MembershipWitness>& witnesses);

struct EdgeTransitiveMatch {
  EdgeTransitiveFamily family = EdgeTransitiveFamily::ET_a;
  RoseWindowParams matched_params;
  std::map<std::string, long long> derived;
};

/// Family (a)-(d) containing the triple, trying canonical_params(p) first
/// (where the classification is stated) and then the remaining sign
/// variants. The first match in (a)-(d) order is returned.
std::optional<EdgeTransitiveMatch> edge_transitive_family(const RoseWindowParams& p);
std::optional<std::map<std::string, long long>> satisfies_edge_transitive_row(
    EdgeTransitiveFamily f, const RoseWindowParams& p);

enum class TheoremCase { none, odd, even_not_edge_transitive, even_edge_transitive };

std::string_view to_string(TheoremCase c);

/// The classification case (i, ii or iii) of a non-trivially unstable
/// graph, chosen by the parity of n and edge-transitivity of the cover.
TheoremCase theorem_case(const RoseWindowParams& p, bool cover_edge_transitive);

/// Families a graph of the given case is expected to lie in.
std::vector<Family> predicted_families(TheoremCase c);

/// Outcome of the two edge-orbit order statements and the two-orbit
/// criterion. Each value is nullopt when its hypothesis does not apply.
struct OrderPropositions {
  std::size_t edge_orbits = 0;
  BigInt aut_order;
  std::optional<bool> three_orbits_order;   // |Aut| = 2n
  std::optional<bool> two_orbits_order;     // |Aut| = 4n
  std::optional<bool> two_orbit_criterion;  // k = 2 <=> r^2 = 1, ra = +-a
  bool holds() const {
    return three_orbits_order.value_or(true) && two_orbits_order.value_or(true) &&
           two_orbit_criterion.value_or(true);
  }
};

OrderPropositions order_propositions_check(const RoseWindowParams& p, const PermGroup& aut,
                                           std::size_t edge_orbits);
OrderPropositions order_propositions_check(const RoseWindowParams& p);

/// Centrality of rho^{n/2} in Aut(CDC). nullopt unless n is even, the graph
/// is non-trivially unstable and the cover is edge-transitive.
std::optional<bool> central_half_turn_check(const RoseWindowParams& p, const PermGroup& cover_aut,
                                            bool nontrivially_unstable,
                                            bool cover_edge_transitive);
std::optional<bool> central_half_turn_check(const RoseWindowParams& p);

/// Arc-transitivity facts for an edge-transitive cover of a non-bipartite
/// graph with n > 4.
struct ArcTransitivity {
  bool arc_transitive = false;
  bool two_arc_transitive = false;
  bool three_arc_transitive = false;
  BigInt stabilizer_order;
  /// Not 3-arc-transitive, and the stabilizer order is a power of 2 or lies
  /// in {12, 24}.
  bool holds = false;
  /// Sharper form: arc-transitive, not 3-arc-transitive, order a power of 2
  /// when exactly 1-arc-transitive and 12 or 24 when 2-arc-transitive.
  bool holds_sharp = false;
};

/// nullopt when the hypothesis (non-bipartite, n > 4, cover edge-transitive)
/// fails.
std::optional<ArcTransitivity> arc_transitivity_check(const RoseWindowParams& p,
                                                      const PermGroup& cover_aut,
                                                      bool cover_edge_transitive);

/// All triples on n satisfying some row literally, with the rows they satisfy.
std::vector<MembershipWitness> literal_family_members(int n);

}  // namespace rwstab
