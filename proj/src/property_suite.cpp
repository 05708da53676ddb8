#include "rwstab/property_suite.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "rwstab/automorphisms.hpp"
#include "rwstab/sweep.hpp"

namespace rwstab {
namespace {

constexpr std::size_t kMaxExamples = 5;

bool all_lengths(const std::vector<std::vector<Vertex>>& cycles, int expected) {
  return std::all_of(cycles.begin(), cycles.end(),
                     [&](const auto& c) { return static_cast<int>(c.size()) == expected; });
}

bool cycle_lengths_hold(const RoseWindowParams& p) {
  const auto s = cdc_structure(p);
  const auto predicted = predicted_cycle_lengths(p);
  return all_lengths(s.rim_cycles, p.n % 2 ? 2 * p.n : p.n) && all_lengths(s.hub_components, predicted.hub) &&
         all_lengths(s.spoke_cycles, predicted.spoke);
}

bool s_partition_holds(const RoseWindowParams& p) {
  const auto s = cdc_structure(p);
  if (!s.s_partition || s.rim_cycles.size() != 2) return false;
  const auto& cells = *s.s_partition;
  auto sorted = [](std::vector<Vertex> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (sorted(s.rim_cycles[0]) != cells[0] && sorted(s.rim_cycles[0]) != cells[1]) return false;
  for (const auto& piece : s.hub_components) {
    const auto name = cdc_name(p, piece.front());
    const int tag = p.r % 2 ? (name.i % 2 == *name.layer) : name.i % 2;
    for (Vertex x : piece) {
      const auto other = cdc_name(p, x);
      if ((p.r % 2 ? (other.i % 2 == *other.layer) : other.i % 2) != tag) return false;
    }
  }
  return true;
}

bool trichotomy_holds(const RoseWindowParams& p) {
  const bool by_params = bipartite_by_params(p);
  const bool base_bipartite = bipartition(build(p)).has_value();
  const bool cover_split = !is_connected(build_cdc(p));
  return by_params == base_bipartite && base_bipartite == cover_split;
}

bool odd_map_holds(const RoseWindowParams& p) {
  const auto rewrite = odd_n_cdc_params(p);
  const auto& images = rewrite.map.images();
  std::vector<Vertex> seen(images.begin(), images.end());
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != i) return false;
  return relabel(build_cdc(p), images) == build(rewrite.target);
}

bool flips_isomorphic(const RoseWindowParams& p) {
  const auto reference = canonical_form(build(p));
  for (const auto& q : iso_variants(p))
    if (!(canonical_form(build(q)) == reference)) return false;
  return true;
}

bool quotients_hold(const RoseWindowParams& p, std::size_t& tried) {
  const Graph cover = build_cdc(p);
  for (int h = 2; h <= p.n; ++h) {
    if (p.n % h) continue;
    std::optional<QuotientReduction> q;
    try {
      q = quotient_params(p, h);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++tried;
    if (!(quotient_graph(cover, q->cells) == build_cdc(q->params))) return false;
  }
  return true;
}

}  // namespace

void PropertyCheck::record(bool ok, const std::string& instance) {
  ++checked;
  if (ok) return;
  ++failed;
  if (examples.size() < kMaxExamples) examples.push_back(instance);
}

bool PropertySuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PropertyCheck& c) { return c.informational || c.passed(); });
}

PropertySuiteResult run_property_suite(int n_min, int n_max, unsigned jobs) {
  SweepOptions options;
  options.n_min = n_min;
  options.n_max = n_max;
  options.jobs = jobs;
  const SweepReport sweep = run_sweep(options);

  PropertySuiteResult result;
  result.n_min = n_min;
  result.n_max = n_max;
  result.checks.reserve(32);
  auto add = [&](std::string name, std::string statement, bool informational = false) -> PropertyCheck& {
    result.checks.push_back({std::move(name), std::move(statement), 0, 0, {}, informational});
    return result.checks.back();
  };

  PropertyCheck cycles{"cycle-lengths", "measured hub and spoke cycle lengths equal the closed forms"};
  PropertyCheck partition{"s-partition", "rim cycles are S1 and S2; hub pieces respect the S3/S4 split"};
  PropertyCheck trichotomy{"bipartite-trichotomy", "Gamma bipartite <=> CDC disconnected <=> n, a even and r odd"};
  PropertyCheck flips{"flip-isomorphism", "the four sign variants give isomorphic graphs"};
  PropertyCheck quotient{"quotient", "rotation quotients of the cover are covers of reduced triples"};
  PropertyCheck odd_map{"odd-cover-map", "for odd n the explicit map is an isomorphism onto R_2n(a',r')"};
  std::size_t quotient_cases = 0;

  for (int n = n_min; n <= n_max; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int r = 1; r < n; ++r) {
        const RoseWindowParams p{n, a, r};
        const std::string id = p.to_string();
        trichotomy.record(trichotomy_holds(p), id);
        if (n % 2) odd_map.record(odd_map_holds(p), id);
        if (!is_canonical(p)) continue;
        if (!is_degenerate(p)) cycles.record(cycle_lengths_hold(p), id);
        if (n % 2 == 0) partition.record(s_partition_holds(p), id);
        flips.record(flips_isomorphic(p), id);
        quotient.record(quotients_hold(p, quotient_cases), id);
      }
    }
  }
  quotient.statement += " (" + std::to_string(quotient_cases) + " quotients)";

  for (auto* c : {&cycles, &partition, &trichotomy, &flips, &quotient, &odd_map}) result.checks.push_back(*c);

  auto& three = add("three-orbit-order", "3 edge orbits and 2a != 0 => |Aut| = 2n");
  auto& two = add("two-orbit-order", "2 edge orbits and 2a != 0 => |Aut| = 4n");
  auto& criterion = add("two-orbit-criterion", "not edge-transitive => (2 orbits <=> r^2 = 1, ra = +-a)");
  auto& criterion_generic =
      add("two-orbit-criterion-2a!=0", "the same criterion restricted to 2a != 0", true);
  auto& edge_transitive = add("edge-transitive-families", "edge-transitive graphs lie in families (a)-(d)");
  auto& expected = add("expected-group", "|expected| = 2|Aut|, expected <= Aut(CDC), order test = fiber scan");
  auto& commutation = add("fiber-commutation", "fiber preservation <=> commuting with beta, per generator");
  auto& central = add("central-half-turn", "rho^(n/2) is central in Aut(CDC) when applicable");
  auto& arcs = add("arc-transitivity", "edge-transitive covers: not 3-arc-transitive, stabilizer 2^k, 12 or 24");
  auto& arcs_sharp = add("arc-transitivity-sharp", "stabilizer 2^k when 1-transitive, 12 or 24 when 2-transitive", true);
  auto& soundness = add("family-soundness", "every family member is unstable");

  for (const InstanceRecord& rec : sweep.records) {
    const std::string id = rec.params.to_string();
    if (rec.timeout) continue;
    const auto& op = rec.order_propositions;
    if (op.three_orbits_order) three.record(*op.three_orbits_order, id);
    if (op.two_orbits_order) two.record(*op.two_orbits_order, id);
    if (op.two_orbit_criterion) {
      criterion.record(*op.two_orbit_criterion, id);
      if (mod(2LL * rec.params.a, rec.params.n) != 0) criterion_generic.record(*op.two_orbit_criterion, id);
    }
    if (rec.edge_orbits == 1) edge_transitive.record(rec.edge_transitive_family.has_value(), id);
    expected.record(rec.expected_order_ok && rec.expected_in_cover && rec.stable() != rec.fiber_scan_unstable, id);
    if (rec.connected && !rec.bipartite && rec.unexpectedness) {
      commutation.record(rec.unexpectedness->columns_agree(), id);
    }
    if (rec.central_half_turn) central.record(*rec.central_half_turn, id);
    if (rec.arc_transitivity) {
      arcs.record(rec.arc_transitivity->holds, id);
      arcs_sharp.record(rec.arc_transitivity->holds_sharp, id);
    }
    if (!rec.families.empty()) soundness.record(!rec.stable(), id);
  }
  return result;
}

void print_property_table(std::ostream& out, const PropertySuiteResult& result) {
  out << "property suite, n = " << result.n_min << ".." << result.n_max << '\n';
  for (const auto& c : result.checks) {
    const char* verdict = c.passed() ? "PASS" : (c.informational ? "INFO" : "FAIL");
    out << std::left << std::setw(5) << verdict << ' ' << std::setw(28) << c.name << std::right << std::setw(7)
        << c.checked << " checked " << std::setw(5) << c.failed << " failed   " << c.statement;
    if (!c.examples.empty()) {
      out << "  [";
      for (std::size_t i = 0; i < c.examples.size(); ++i) out << (i ? " " : "") << c.examples[i];
      if (c.failed > c.examples.size()) out << " ...";
      out << ']';
    }
    out << '\n';
  }
  out << (result.passed() ? "all checks passed" : "some checks failed") << '\n';
}

}  // namespace rwstab
