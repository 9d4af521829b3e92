#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pfano/pipeline.hpp"

namespace pfano {

/// Bumped whenever a key changes meaning.
inline constexpr int kReportSchemaVersion = 1;

/// [{"c": "<rational>", "x": [..], "d": [..]}, ...] in the operator's term order.
nlohmann::ordered_json operator_terms(const WeylOperator& p);

std::vector<std::string> operator_strings(const std::vector<WeylOperator>& gens);

/// {"schema", "dim", "index", "order_used", "rank", "lower_bound", "status",
///  "variables", "generators", "generator_terms", "timings"}. Without
/// timings the report is a pure function of the input.
nlohmann::ordered_json report_json(const PipelineReport& r, bool with_timings = true);

nlohmann::ordered_json timings_json(const StageTimings& t);

}  // namespace pfano
