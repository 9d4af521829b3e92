#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfano/fano.hpp"
#include "pfano/integration.hpp"
#include "pfano/rational_function.hpp"
#include "pfano/weyl.hpp"

namespace pfano {

enum class PipelineStatus { kConverged, kCapReached, kOutputOne, kNotHolonomic };

/// "converged", "cap_reached", "output_one", "not_holonomic".
std::string to_string(PipelineStatus s);

/// Wall-clock seconds per stage: approximate annihilator, (-w,w) Groebner
/// basis with the b-function (and the holonomicity check), the module over
/// D', its final Groebner basis.
struct StageTimings {
  double ann = 0;
  double gb_w = 0;
  double base = 0;
  double gb_final = 0;

  StageTimings& operator+=(const StageTimings& o);
};

struct ApproxIntegration {
  std::vector<WeylOperator> ann;
  bool holonomic = false;
  /// Generators of J' in D'; empty means <0>.
  std::vector<WeylOperator> generators;
  IntegrationReport integration;
  StageTimings timings;
};

/// Integrates Ann^(m)(phi) over the split variables of `ring` with weight
/// `w`. A non-holonomic Ann^(m) gives J' = <0>.
ApproxIntegration approx_integration(const RationalFunction& phi, int m, const WeylRingPtr& ring,
                                     const WeightVector& w);
/// w = 1 on the split variables, 0 elsewhere.
ApproxIntegration approx_integration(const RationalFunction& phi, int m, const WeylRingPtr& ring);

struct PipelineReport {
  int dim = 0;
  int index = 0;
  /// Last order tried (0 when none ran).
  int order_used = 0;
  std::optional<std::size_t> rank;
  std::size_t lower_bound = 0;
  PipelineStatus status = PipelineStatus::kCapReached;
  /// Variables of D'.
  std::vector<std::string> variables;
  /// J' from the last order, primitive and sorted under grevlex of D'.
  std::vector<WeylOperator> generators;
  /// Summed over all orders tried.
  StageTimings timings;
};

/// Default order cap: PFANO_MAX_ORDER when set to a positive integer, else 3.
int default_max_order();

/// Raises the order i = 1..max_order until the holonomic rank of the
/// integration ideal of Ann^(i) reaches the Stienstra bound.
PipelineReport fano_period_system(int dim, int index, int max_order,
                                  const std::vector<FanoEntry>& table);
PipelineReport fano_period_system(int dim, int index, int max_order);
PipelineReport fano_period_system(int dim, int index);

}  // namespace pfano
