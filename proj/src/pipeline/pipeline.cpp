#include "pfano/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>

#include "pfano/annihilator.hpp"
#include "pfano/invariants.hpp"
#include "pfano/stienstra.hpp"

namespace pfano {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Primitive, deduplicated, ascending by terms under the ring's grevlex.
std::vector<WeylOperator> normalized(std::vector<WeylOperator> gens) {
  for (auto& g : gens) g = g.primitive();
  if (gens.empty()) return gens;
  const MonomialOrder& ord = gens.front().ring()->order();
  auto less = [&](const WeylOperator& a, const WeylOperator& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
      if (int c = ord.compare(ta[i].m, tb[i].m); c != 0) return c < 0;
      if (ta[i].c != tb[i].c) return ta[i].c < tb[i].c;
    }
    return ta.size() < tb.size();
  };
  std::sort(gens.begin(), gens.end(), less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace

std::string to_string(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::kConverged:
      return "converged";
    case PipelineStatus::kCapReached:
      return "cap_reached";
    case PipelineStatus::kOutputOne:
      return "output_one";
    case PipelineStatus::kNotHolonomic:
      return "not_holonomic";
  }
  return "unknown";
}

StageTimings& StageTimings::operator+=(const StageTimings& o) {
  ann += o.ann;
  gb_w += o.gb_w;
  base += o.base;
  gb_final += o.gb_final;
  return *this;
}

ApproxIntegration approx_integration(const RationalFunction& phi, int m, const WeylRingPtr& ring,
                                     const WeightVector& w) {
  if (m < 1) throw Error("approximation order must be at least 1");
  ApproxIntegration out;
  const auto t0 = Clock::now();
  out.ann = approx_ann(phi, m, ring);
  out.timings.ann = since(t0);
  const auto t1 = Clock::now();
  out.holonomic = is_holonomic(out.ann);
  const double check = since(t1);
  out.timings.gb_w = check;
  if (!out.holonomic) return out;
  try {
    out.generators = normalized(integration_ideal(out.ann, w, &out.integration));
  } catch (const NotHolonomicError&) {
    // A holonomic ideal has a nonzero b-function; kept for safety.
    out.holonomic = false;
    out.generators.clear();
  }
  out.timings.gb_w = check + out.integration.seconds_gb_w;
  out.timings.base = out.integration.seconds_base;
  out.timings.gb_final = out.integration.seconds_gb_final;
  return out;
}

ApproxIntegration approx_integration(const RationalFunction& phi, int m, const WeylRingPtr& ring) {
  WeightVector w(static_cast<std::size_t>(ring->n()), 0);
  for (int i = 0; i < ring->split(); ++i) w[static_cast<std::size_t>(i)] = 1;
  return approx_integration(phi, m, ring, w);
}

int default_max_order() {
  if (const char* env = std::getenv("PFANO_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1000) return static_cast<int>(v);
  }
  return 3;
}

PipelineReport fano_period_system(int dim, int index, int max_order,
                                  const std::vector<FanoEntry>& table) {
  if (max_order < 1) throw Error("max order must be at least 1");
  const LatticePolytope p = load_fano(dim, index, table);
  PipelineReport rep;
  rep.dim = dim;
  rep.index = index;
  rep.lower_bound = rank_lower_bound(p).r;
  const WeylRingPtr ring = period_ring(p);
  rep.variables = ring->parameter_ring()->names();
  const RationalFunction phi = integrand(p);
  for (int i = 1; i <= max_order; ++i) {
    rep.order_used = i;
    ApproxIntegration step = approx_integration(phi, i, ring);
    rep.timings += step.timings;
    if (!step.holonomic) {
      rep.status = PipelineStatus::kNotHolonomic;
      rep.rank.reset();
      rep.generators.clear();
      continue;
    }
    rep.generators = std::move(step.generators);
    rep.rank = holonomic_rank(rep.generators);
    if (!step.integration.s0) {
      // J' = D, and it stays D at every higher order.
      rep.status = PipelineStatus::kOutputOne;
      return rep;
    }
    if (rep.rank == rep.lower_bound) {
      rep.status = PipelineStatus::kConverged;
      return rep;
    }
    rep.status = PipelineStatus::kCapReached;
  }
  return rep;
}

PipelineReport fano_period_system(int dim, int index, int max_order) {
  return fano_period_system(dim, index, max_order, fano_table());
}

PipelineReport fano_period_system(int dim, int index) {
  return fano_period_system(dim, index, default_max_order());
}

}  // namespace pfano
