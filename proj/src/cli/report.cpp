#include "pfano/report.hpp"

namespace pfano {

nlohmann::ordered_json operator_terms(const WeylOperator& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  const int n = p.ring()->n();
  for (const auto& t : p.terms()) {
    std::vector<int> x(static_cast<std::size_t>(n));
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = t.m[i];
      d[static_cast<std::size_t>(i)] = t.m[n + i];
    }
    out.push_back({{"c", to_string(t.c)}, {"x", x}, {"d", d}});
  }
  return out;
}

std::vector<std::string> operator_strings(const std::vector<WeylOperator>& gens) {
  std::vector<std::string> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.to_string());
  return out;
}

nlohmann::ordered_json timings_json(const StageTimings& t) {
  return {{"ann", t.ann}, {"gb_w", t.gb_w}, {"base", t.base}, {"gb_final", t.gb_final}};
}

nlohmann::ordered_json report_json(const PipelineReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchemaVersion;
  j["dim"] = r.dim;
  j["index"] = r.index;
  j["order_used"] = r.order_used;
  j["rank"] = r.rank ? nlohmann::ordered_json(*r.rank) : nlohmann::ordered_json(nullptr);
  j["lower_bound"] = r.lower_bound;
  j["status"] = to_string(r.status);
  j["variables"] = r.variables;
  j["generators"] = operator_strings(r.generators);
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& g : r.generators) terms.push_back(operator_terms(g));
  j["generator_terms"] = std::move(terms);
  if (with_timings) j["timings"] = timings_json(r.timings);
  return j;
}

}  // namespace pfano
