#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "rwstab/analysis.hpp"
#include "rwstab/sweep.hpp"

namespace rwstab {

/// Flat per-instance record. Orders are decimal strings; lists are arrays.
nlohmann::ordered_json record_to_json(const InstanceRecord& record);

nlohmann::ordered_json summary_to_json(const SweepSummary& summary);

/// {"tool_version", "n_range", "records", "summary"}.
nlohmann::ordered_json report_to_json(const SweepReport& report);

/// Column names of the CSV projection, equal to the record JSON keys.
const std::vector<std::string>& csv_columns();

/// Header plus one row per record; lists joined with ';'.
void write_csv(std::ostream& out, const SweepReport& report);
void write_json(std::ostream& out, const SweepReport& report);

}  // namespace rwstab
