#pragma once

#include <random>
#include <vector>

#include "pfano/polynomial.hpp"
#include "pfano/weyl.hpp"

namespace pfano::testing {

struct TermSpec {
  long num;
  long den;
  std::vector<int> exps;
};

inline Polynomial poly(const PolyRingPtr& ring, std::initializer_list<TermSpec> spec) {
  Polynomial p(ring);
  for (const auto& t : spec) p += Polynomial::monomial(ring, t.exps, make_rational(t.num, t.den));
  return p;
}

/// Random sparse polynomial with small coefficients and bounded degree.
inline Polynomial random_poly(std::mt19937& rng, const PolyRingPtr& ring, int max_terms,
                              int max_deg, int coef_range = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-coef_range, coef_range);
  std::uniform_int_distribution<long> den(1, 3);
  Polynomial p(ring);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<int> e(static_cast<std::size_t>(ring->nvars()));
    for (auto& x : e) x = deg(rng) / std::max(1, ring->nvars() / 2);
    p += Polynomial::monomial(ring, e, make_rational(coef(rng), den(rng)));
  }
  return p;
}

/// Random operator with exponents up to max_exp in every slot.
inline WeylOperator random_op(std::mt19937& rng, const WeylRingPtr& ring, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<long> den(1, 2);
  WeylOperator p(ring);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<int> u(static_cast<std::size_t>(ring->n()));
    std::vector<int> v(static_cast<std::size_t>(ring->n()));
    for (auto& e : u) e = ex(rng);
    for (auto& e : v) e = ex(rng);
    p += WeylOperator::monomial(ring, u, v, make_rational(coef(rng), den(rng)));
  }
  return p;
}

}  // namespace pfano::testing
