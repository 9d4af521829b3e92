#pragma once

#include <vector>

#include "pfano/groebner.hpp"
#include "pfano/rational_function.hpp"
#include "pfano/weyl.hpp"

namespace pfano {

/// Undetermined-coefficient template for operators of order <= i:
/// P = sum a_alpha d^alpha acts on f/g as (sum a_alpha c_alpha) / g^(i+1).
struct AnsatzTemplate {
  int order = 0;
  /// Exponents of d^alpha over all variables, highest degree first, then
  /// lexicographically descending; the constant slot is last.
  std::vector<std::vector<int>> alphas;
  std::vector<Polynomial> coefficients;
};

AnsatzTemplate build_ansatz(const RationalFunction& phi, int order);

/// Generators of the left ideal generated by annihilators of phi of order
/// <= `order`. `ring` must use the same variable names as phi. The
/// generators are the reduced Groebner basis of the syzygy module of the
/// ansatz coefficients, read as operators and made primitive.
std::vector<WeylOperator> approx_ann(const RationalFunction& phi, int order, const WeylRingPtr& ring);
std::vector<WeylOperator> approx_ann(const RationalFunction& phi, int order);

}  // namespace pfano
