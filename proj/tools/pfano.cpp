// Command-line front end: approximate annihilators, integration ideals,
// holonomic ranks, the period pipeline, the polytope table and benchmarks.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfano/annihilator.hpp"
#include "pfano/fano.hpp"
#include "pfano/integration.hpp"
#include "pfano/invariants.hpp"
#include "pfano/parse.hpp"
#include "pfano/pipeline.hpp"
#include "pfano/report.hpp"
#include "pfano/stienstra.hpp"

using namespace pfano;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::string format = "text";
  std::string polytopes;

  bool json_out() const { return format == "json"; }
  std::vector<FanoEntry> table() const {
    return polytopes.empty() ? fano_table() : read_fano_table(polytopes);
  }
};

WeylRingPtr make_ring(const std::string& vars) {
  const VariableDecl decl = parse_variable_decl(vars);
  return WeylRing::make(decl.names, decl.split);
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw Error("bad integer '" + item + "'");
    }
    if (used != item.size()) throw Error("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void print_operators(const Globals& g, const std::vector<WeylOperator>& ops, json extra) {
  if (g.json_out()) {
    extra["generators"] = operator_strings(ops);
    std::cout << extra.dump(2) << "\n";
    return;
  }
  for (const auto& op : ops) std::cout << op.to_string() << "\n";
}

// Rows look like "3/9"; dims alone ("2") stand for every row of that dim.
std::vector<std::pair<int, int>> parse_rows(const std::string& text,
                                            const std::vector<FanoEntry>& table) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto slash = item.find('/');
    if (slash == std::string::npos) {
      const long dim = parse_longs(item).at(0);
      for (const auto& e : table) {
        if (e.dim == dim) out.emplace_back(e.dim, e.index);
      }
      continue;
    }
    const long dim = parse_longs(item.substr(0, slash)).at(0);
    const long index = parse_longs(item.substr(slash + 1)).at(0);
    out.emplace_back(static_cast<int>(dim), static_cast<int>(index));
  }
  return out;
}

int run_approx_ann(const Globals& g, const std::string& vars, int order, const std::string& expr) {
  const WeylRingPtr ring = make_ring(vars);
  const auto ops = approx_ann(parse_function(expr, ring), order, ring);
  print_operators(g, ops, {{"order", order}, {"variables", ring->names()}});
  return 0;
}

int run_integrate(const Globals& g, const std::string& vars, int order, const std::string& weight,
                  const std::vector<std::string>& exprs) {
  const WeylRingPtr ring = make_ring(vars);
  if (ring->split() == 0) throw Error("declare integration variables before '|'");
  WeightVector w(static_cast<std::size_t>(ring->n()), 0);
  for (int i = 0; i < ring->split(); ++i) w[static_cast<std::size_t>(i)] = 1;
  if (!weight.empty()) {
    const auto v = parse_longs(weight);
    if (v.size() != w.size()) throw Error("weight needs one entry per variable");
    w.assign(v.begin(), v.end());
  }
  std::vector<Expression> parsed;
  for (const auto& e : exprs) parsed.push_back(parse_expression(e, ring));
  const bool function = parsed.size() == 1 && !parsed[0].is_operator;
  json info;
  std::vector<WeylOperator> out;
  IntegrationReport rep;
  if (function) {
    ApproxIntegration r = approx_integration(parsed[0].function, order, ring, w);
    info["holonomic"] = r.holonomic;
    info["timings"] = timings_json(r.timings);
    rep = r.integration;
    out = std::move(r.generators);
  } else {
    std::vector<WeylOperator> gens;
    for (auto& e : parsed) {
      if (!e.is_operator) {
        // A bare polynomial is a multiplication operator.
        if (!e.function.den().is_constant()) throw Error("rational functions are not operators");
        gens.push_back(WeylOperator::from_polynomial(ring, e.function.num()) *
                       (Rational(1) / e.function.den().leading_term().c));
      } else {
        gens.push_back(e.op);
      }
    }
    out = integration_ideal(gens, w, &rep);
  }
  info["b"] = rep.b.ring() ? rep.b.to_string() : "";
  info["s0"] = rep.s0 ? json(*rep.s0) : json(nullptr);
  info["variables"] = ring->parameter_ring()->names();
  if (!g.json_out()) {
    if (info.contains("holonomic") && !info["holonomic"].get<bool>()) {
      std::cerr << "approximate annihilator is not holonomic; J' = <0>\n";
    }
  }
  print_operators(g, out, info);
  return 0;
}

int run_rank(const Globals& g, const std::string& vars, const std::vector<std::string>& exprs,
             std::optional<int> dim, std::optional<int> index) {
  json info;
  if (dim || index) {
    if (!dim || !index) throw Error("--dim and --index go together");
    const auto table = g.table();
    const LatticePolytope p = load_fano(*dim, *index, table);
    const auto rank = holonomic_rank(gkz_system(gkz_matrix(p), period_beta(p)));
    const RankBound bound = rank_lower_bound(p);
    info = {{"dim", *dim},
            {"index", *index},
            {"gkz_rank", rank ? json(*rank) : json(nullptr)},
            {"lower_bound", bound.r}};
    if (g.json_out()) {
      std::cout << info.dump(2) << "\n";
    } else {
      std::cout << "gkz rank " << (rank ? std::to_string(*rank) : "infinite") << "\n"
                << "lower bound " << bound.r << "\n";
    }
    return 0;
  }
  if (vars.empty() || exprs.empty()) throw Error("give --vars and operators, or --dim/--index");
  const WeylRingPtr ring = make_ring(vars);
  std::vector<WeylOperator> ops;
  for (const auto& e : exprs) ops.push_back(parse_operator(e, ring));
  const auto rank = holonomic_rank(ops);
  const bool hol = is_holonomic(ops);
  if (g.json_out()) {
    std::cout << json{{"rank", rank ? json(*rank) : json(nullptr)}, {"holonomic", hol}}.dump(2)
              << "\n";
  } else {
    std::cout << "rank " << (rank ? std::to_string(*rank) : "infinite") << "\n"
              << "holonomic " << (hol ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_fano(const Globals& g, int dim, int index, int max_order, bool no_timings) {
  const auto table = g.table();
  const PipelineReport r = fano_period_system(dim, index, max_order, table);
  if (g.json_out()) {
    std::cout << report_json(r, !no_timings).dump(2) << "\n";
    return 0;
  }
  std::cout << "polytope " << dim << "/" << index << "\n"
            << "status " << to_string(r.status) << " at order " << r.order_used << "\n"
            << "rank " << (r.rank ? std::to_string(*r.rank) : "-") << ", lower bound "
            << r.lower_bound << "\n";
  for (const auto& op : r.generators) std::cout << op.to_string() << "\n";
  if (!no_timings) {
    std::cout << "timings ann " << r.timings.ann << " gb_w " << r.timings.gb_w << " base "
              << r.timings.base << " gb_final " << r.timings.gb_final << "\n";
  }
  return 0;
}

int run_table(const Globals& g, bool bounds) {
  const auto table = g.table();
  json rows = json::array();
  for (const auto& e : table) {
    json row{{"dim", e.dim}, {"index", e.index}, {"vertices", e.vertices}};
    if (bounds) row["lower_bound"] = rank_lower_bound(LatticePolytope{e.dim, e.vertices}).r;
    rows.push_back(std::move(row));
  }
  if (g.json_out()) {
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  for (const auto& row : rows) {
    std::cout << row["dim"].get<int>() << "/" << row["index"].get<int>();
    if (bounds) std::cout << " r=" << row["lower_bound"].get<std::size_t>();
    for (const auto& v : row["vertices"]) std::cout << " " << v.dump();
    std::cout << "\n";
  }
  return 0;
}

int run_bench(const Globals& g, const std::string& rows_text, int repeat, int jobs, int max_order) {
  const auto table = g.table();
  const auto rows = parse_rows(rows_text, table);
  std::vector<json> results(rows.size());
  std::size_t next = 0;
  std::mutex mu;
  auto worker = [&]() {
    while (true) {
      std::size_t k = 0;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next == rows.size()) return;
        k = next++;
      }
      const auto [dim, index] = rows[k];
      try {
        // The first run warms caches and allocators; it is not counted.
        PipelineReport r = fano_period_system(dim, index, max_order, table);
        StageTimings sum;
        for (int i = 0; i < repeat; ++i) {
          r = fano_period_system(dim, index, max_order, table);
          sum += r.timings;
        }
        const double n = repeat;
        results[k] = {{"dim", dim},
                      {"index", index},
                      {"status", to_string(r.status)},
                      {"order_used", r.order_used},
                      {"rank", r.rank ? json(*r.rank) : json(nullptr)},
                      {"lower_bound", r.lower_bound},
                      {"timings", timings_json({sum.ann / n, sum.gb_w / n, sum.base / n,
                                                sum.gb_final / n})}};
      } catch (const Error& e) {
        results[k] = {{"dim", dim}, {"index", index}, {"error", e.what()}};
      }
    }
  };
  std::vector<std::thread> pool;
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(rows.size())));
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (g.json_out()) {
    std::cout << json(results).dump(2) << "\n";
    return 0;
  }
  std::printf("%-6s %-10s %5s %4s %4s %10s %12s %10s %10s\n", "row", "status", "order", "rank",
              "r", "AppAnn", "GB+b", "base", "GB");
  for (const auto& r : results) {
    const std::string row =
        std::to_string(r["dim"].get<int>()) + "/" + std::to_string(r["index"].get<int>());
    if (r.contains("error")) {
      std::printf("%-6s error: %s\n", row.c_str(), r["error"].get<std::string>().c_str());
      continue;
    }
    const auto& t = r["timings"];
    std::printf("%-6s %-10s %5d %4s %4zu %10.4f %12.4f %10.4f %10.4f\n", row.c_str(),
                r["status"].get<std::string>().c_str(), r["order_used"].get<int>(),
                r["rank"].is_null() ? "-" : std::to_string(r["rank"].get<std::size_t>()).c_str(),
                r["lower_bound"].get<std::size_t>(), t["ann"].get<double>(),
                t["gb_w"].get<double>(), t["base"].get<double>(), t["gb_final"].get<double>());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holonomic systems for periods of smooth Fano polytopes"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--polytopes", g.polytopes, "Polytope table (JSON) replacing the embedded one");

  std::string vars;
  int order = 1;
  std::string weight;
  std::vector<std::string> exprs;
  std::optional<int> dim;
  std::optional<int> index;
  int max_order = default_max_order();
  bool no_timings = false;
  bool bounds = false;
  std::string rows = "2/0,2/1,2/2,2/3,3/0,3/1,3/2,3/3,3/4,3/9";
  int repeat = 1;
  int jobs = 1;

  auto* ann = app.add_subcommand("approx-ann", "Annihilators of order <= N of a rational function");
  ann->add_option("--vars", vars, "Variables, e.g. \"t1,t2,x1,x2\"")->required();
  ann->add_option("--order", order, "Operator order")->capture_default_str();
  ann->add_option("expr", exprs, "Rational function")->required()->expected(1);

  auto* integ = app.add_subcommand(
      "integrate", "Integration ideal of a function (via Ann^(N)) or of an operator list");
  integ->add_option("--vars", vars, "Variables, integration ones first: \"t1,t2|x1,x2\"")
      ->required();
  integ->add_option("--order", order, "Approximation order for a function")->capture_default_str();
  integ->add_option("--weight", weight, "Weight vector, comma separated");
  integ->add_option("expr", exprs, "A rational function, or operators")->required();

  auto* rank = app.add_subcommand("rank", "Holonomic rank of operators, or of a GKZ period system");
  rank->add_option("--vars", vars, "Variables");
  rank->add_option("--dim", dim, "Polytope dimension");
  rank->add_option("--index", index, "Polytope index");
  rank->add_option("ops", exprs, "Operators");

  auto* fano = app.add_subcommand("fano", "Period system of a smooth Fano polytope");
  fano->add_option("--dim", dim, "Polytope dimension")->required();
  fano->add_option("--index", index, "Polytope index")->required();
  fano->add_option("--max-order", max_order, "Order cap (default: PFANO_MAX_ORDER or 3)")
      ->capture_default_str();
  fano->add_flag("--no-timings", no_timings, "Leave timings out of the report");

  auto* tab = app.add_subcommand("table", "List the embedded polytopes");
  tab->add_flag("--bounds", bounds, "Add the rank lower bound of every row");

  auto* bench = app.add_subcommand("bench", "Per-stage timings of the period pipeline");
  bench->add_option("--rows", rows, "Rows like 3/9, or a bare dimension for all its rows")
      ->capture_default_str();
  bench->add_option("--repeat", repeat, "Timed runs per row (after one warm-up)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--jobs", jobs, "Rows run concurrently")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--max-order", max_order, "Order cap")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ann->parsed()) return run_approx_ann(g, vars, order, exprs.front());
    if (integ->parsed()) return run_integrate(g, vars, order, weight, exprs);
    if (rank->parsed()) return run_rank(g, vars, exprs, dim, index);
    if (fano->parsed()) return run_fano(g, *dim, *index, max_order, no_timings);
    if (tab->parsed()) return run_table(g, bounds);
    if (bench->parsed()) return run_bench(g, rows, repeat, jobs, max_order);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
