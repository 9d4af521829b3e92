#pragma once

#include <optional>
#include <vector>

#include "pfano/weyl.hpp"

namespace pfano {

/// Raised when the b-function along the integration weight vanishes, which
/// happens for ideals that are not holonomic.
class NotHolonomicError : public Error {
 public:
  using Error::Error;
};

/// Monic generator of in_(-w,w)(I) ∩ K[s] with s = sum w_i x_i d_i.
/// `b` lives in a one-variable ring "s"; it is zero when the intersection is
/// trivial (detected by a degree bound).
struct BFunction {
  Polynomial b;
  WeightVector w;

  bool is_zero() const { return b.is_zero(); }
  int degree() const { return b.is_zero() ? -1 : b.total_degree(); }
};

/// Degree bound used to declare a b-function zero.
inline constexpr int kMaxBDegree = 64;

BFunction generic_b(const std::vector<WeylOperator>& gens, const WeightVector& w,
                    int max_degree = kMaxBDegree);
/// Same, for generators already forming a (-w,w) Groebner basis.
BFunction generic_b_from_basis(const std::vector<WeylOperator>& basis, const WeightVector& w,
                               int max_degree = kMaxBDegree);

/// Largest non-negative integer root.
std::optional<long> max_nonneg_int_root(const Polynomial& b);

struct RestrictionData {
  long s0 = 0;
  /// Exponents beta (over the split variables) with w.beta <= s0, by
  /// descending w-degree, then lexicographically descending; 0 is last.
  std::vector<std::vector<int>> basis;
  std::size_t r = 0;
  /// (d^beta h_i) with x_1 = .. = x_m = 0; zero operators are kept.
  std::vector<WeylOperator> restricted;
};

/// `basis` must be a (-w,w) Groebner basis in D. Generators h_i with
/// s0 < ord(h_i) contribute nothing.
RestrictionData restriction_data(const std::vector<WeylOperator>& basis, const WeightVector& w,
                                 long s0);

struct IntegrationReport {
  std::optional<long> s0;
  Polynomial b;
  std::size_t r = 0;
  double seconds_gb_w = 0;
  double seconds_base = 0;
  double seconds_gb_final = 0;
};

/// Generators of (I + d_1 D + .. + d_m D) ∩ D' where m is the ring's split
/// and D' its parameter ring. `w` is positive on the split variables and 0
/// elsewhere. Returns {1} when the b-function has no non-negative integer
/// root; throws NotHolonomicError when it is zero.
std::vector<WeylOperator> integration_ideal(const std::vector<WeylOperator>& gens,
                                            const WeightVector& w,
                                            IntegrationReport* report = nullptr);
/// Uses w = 1 on the split variables.
std::vector<WeylOperator> integration_ideal(const std::vector<WeylOperator>& gens,
                                            IntegrationReport* report = nullptr);

}  // namespace pfano
