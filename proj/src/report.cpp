#include "rwstab/report.hpp"

#include <ostream>

namespace rwstab {
namespace {

using nlohmann::ordered_json;

std::string big(const BigInt& x) { return x.str(); }

std::string witness_text(const MembershipWitness& w) {
  std::string out = std::string(to_string(w.family)) + "@" + w.matched_params.to_string();
  if (!w.derived.empty()) {
    out += "{";
    bool first = true;
    for (const auto& [k, v] : w.derived) {
      out += (first ? "" : ",") + k + "=" + std::to_string(v);
      first = false;
    }
    out += "}";
  }
  return out;
}

ordered_json family_list(const std::vector<Family>& families) {
  ordered_json out = ordered_json::array();
  for (Family f : families) out.push_back(to_string(f));
  return out;
}

ordered_json param_list(const std::vector<RoseWindowParams>& params) {
  ordered_json out = ordered_json::array();
  for (const auto& p : params) out.push_back(p.to_string());
  return out;
}

std::string csv_cell(const ordered_json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < value.size(); ++i) out += (i ? ";" : "") + csv_cell(value[i]);
    return out;
  }
  return value.dump();
}

}  // namespace

ordered_json record_to_json(const InstanceRecord& rec) {
  ordered_json j;
  j["n"] = rec.params.n;
  j["a"] = rec.params.a;
  j["r"] = rec.params.r;
  j["timeout"] = rec.timeout;
  j["degenerate"] = rec.degenerate;
  j["connected"] = rec.connected;
  j["bipartite"] = rec.bipartite;
  j["twin_count"] = rec.twin_count;
  if (rec.timeout) {
    for (const char* key : {"aut_order", "cdc_aut_order", "stable", "stability_kind", "edge_orbits",
                            "cdc_edge_transitive"}) {
      j[key] = nullptr;
    }
    j["reasons"] = ordered_json::array();
  } else {
    j["aut_order"] = big(rec.aut_order);
    j["cdc_aut_order"] = big(rec.cdc_aut_order);
    j["stable"] = rec.stable();
    j["stability_kind"] = to_string(rec.stability.kind);
    ordered_json reasons = ordered_json::array();
    for (auto reason : rec.stability.reasons) reasons.push_back(to_string(reason));
    j["reasons"] = std::move(reasons);
    j["edge_orbits"] = rec.edge_orbits;
    j["cdc_edge_transitive"] = rec.cdc_edge_transitive;
  }
  j["families"] = family_list(rec.families);
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : rec.witnesses) witnesses.push_back(witness_text(w));
  j["witnesses"] = std::move(witnesses);
  j["iso_families"] = rec.iso_families ? family_list(*rec.iso_families) : ordered_json(nullptr);
  j["theorem_case"] = to_string(rec.theorem_case);
  j["violations"] = rec.violations;
  return j;
}

ordered_json summary_to_json(const SweepSummary& s) {
  ordered_json j;
  j["counts"] = s.counts;
  j["violations"] = {{"V1", param_list(s.v1)}, {"V2", param_list(s.v2)}, {"V3", param_list(s.v3)}};
  j["timeouts"] = param_list(s.timeouts);
  j["iso_discrepancies"] = s.iso_discrepancies ? param_list(*s.iso_discrepancies) : ordered_json(nullptr);
  j["passed"] = s.passed();
  return j;
}

ordered_json report_to_json(const SweepReport& report) {
  ordered_json j;
  j["tool_version"] = report.tool_version;
  j["n_range"] = {report.n_range.first, report.n_range.second};
  ordered_json records = ordered_json::array();
  for (const auto& rec : report.records) records.push_back(record_to_json(rec));
  j["records"] = std::move(records);
  j["summary"] = summary_to_json(report.summary);
  return j;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = [] {
    std::vector<std::string> out;
    InstanceRecord sample;
    sample.params = {3, 1, 1};
    const ordered_json record = record_to_json(sample);
    for (const auto& item : record.items()) out.push_back(item.key());
    return out;
  }();
  return columns;
}

void write_csv(std::ostream& out, const SweepReport& report) {
  const auto& columns = csv_columns();
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& rec : report.records) {
    const auto j = record_to_json(rec);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      std::string cell = csv_cell(j.at(columns[c]));
      if (cell.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : cell) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        cell = quoted + "\"";
      }
      out << (c ? "," : "") << cell;
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const SweepReport& report) {
  out << report_to_json(report).dump(2) << '\n';
}

}  // namespace rwstab
