#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pfano/groebner.hpp"
#include "pfano/polynomial.hpp"
#include "pfano/rational_function.hpp"

namespace pfano {

/// Variables x_1..x_n of a Weyl algebra D. The first `split` variables are
/// integration variables; the rest span the parameter subalgebra D'.
///
/// Exponent slots: x_1..x_n at 0..n-1, d_1..d_n at n..2n-1.
class WeylRing {
 public:
  static std::shared_ptr<const WeylRing> make(std::vector<std::string> names, int split = 0);

  int n() const { return static_cast<int>(names_.size()); }
  int split() const { return split_; }
  const std::vector<std::string>& names() const { return names_; }
  /// x names followed by d<name>.
  const std::vector<std::string>& slot_names() const { return slots_; }
  int index_of(const std::string& name) const;

  Algebra algebra() const { return Algebra::weyl(n()); }
  /// Grevlex on all 2n slots: the canonical term layout.
  const MonomialOrder& order() const { return order_; }
  /// The commutative ring on the same variable names.
  const PolyRingPtr& coefficient_ring() const { return coeff_; }
  /// D' on names[split..].
  std::shared_ptr<const WeylRing> parameter_ring() const;

 private:
  WeylRing(std::vector<std::string> names, int split);

  std::vector<std::string> names_;
  std::vector<std::string> slots_;
  int split_ = 0;
  MonomialOrder order_;
  PolyRingPtr coeff_;
};

using WeylRingPtr = std::shared_ptr<const WeylRing>;

/// Element of D in normal order: sum of c * x^u d^v.
class WeylOperator {
 public:
  WeylOperator() = default;
  explicit WeylOperator(WeylRingPtr ring) : ring_(std::move(ring)) {}
  /// Terms in any order; they are canonicalized.
  WeylOperator(WeylRingPtr ring, TermVec<Rational> terms);

  static WeylOperator constant(WeylRingPtr ring, const Rational& c);
  static WeylOperator x(WeylRingPtr ring, int i);
  static WeylOperator d(WeylRingPtr ring, int i);
  static WeylOperator monomial(WeylRingPtr ring, const std::vector<int>& u,
                               const std::vector<int>& v, const Rational& c = 1);
  /// A polynomial in the coefficient ring read as a multiplication operator.
  static WeylOperator from_polynomial(WeylRingPtr ring, const Polynomial& p);

  const WeylRingPtr& ring() const { return ring_; }
  const TermVec<Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Maximal total degree in d; -1 for zero.
  int order() const;

  WeylOperator operator-() const;
  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const Rational& s);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const Rational& s) { return a *= s; }
  friend WeylOperator operator*(const Rational& s, WeylOperator a) { return a *= s; }
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  friend bool operator==(const WeylOperator& a, const WeylOperator& b);

  /// Integer coefficients, content 1, positive leading coefficient.
  WeylOperator primitive() const;
  std::string to_string() const;

 private:
  void check_same_ring(const WeylOperator& o) const;

  WeylRingPtr ring_;
  TermVec<Rational> terms_;
};

using WeightVector = std::vector<std::int64_t>;

/// x_i -> -d_i, d_i -> x_i for i < split; other generators fixed.
WeylOperator fourier(const WeylOperator& p);
/// d_i -> -x_i, x_i -> d_i for i < split.
WeylOperator fourier_inverse(const WeylOperator& p);

/// Action on rational functions; variables are matched by name.
RationalFunction apply(const WeylOperator& p, const RationalFunction& phi);

/// max over terms of -w.u + w.v; throws on the zero operator.
std::int64_t w_order(const WeylOperator& p, const WeightVector& w);
WeylOperator initial_form(const WeylOperator& p, const WeightVector& w);

/// The (-w,w) weight order on 2n slots refined by grevlex. Not a well-order
/// unless w = 0.
MonomialOrder weight_order(const WeylRing& ring, const WeightVector& w);

/// Element of the homogenized Weyl algebra: slot 2n holds the power of h.
struct HomogenizedOperator {
  WeylRingPtr ring;
  TermVec<Rational> terms;
};

HomogenizedOperator homogenize(const WeylOperator& p);
WeylOperator dehomogenize(const HomogenizedOperator& p);

/// Groebner basis of a left ideal. Well-orders run directly in D; other
/// orders go through the homogenized algebra under total degree (h
/// included), then `order`, then dehomogenize. The output is primitive
/// and sorted by ascending leading monomial under `order`.
std::vector<WeylOperator> gb_weyl(const std::vector<WeylOperator>& gens, const MonomialOrder& order,
                                  gb::Stats* stats = nullptr);
/// Grevlex GB (a reduced basis).
std::vector<WeylOperator> gb_weyl(const std::vector<WeylOperator>& gens);

/// Normal form modulo a GB for a well-order.
WeylOperator normal_form(const WeylOperator& f, const std::vector<WeylOperator>& basis,
                         const MonomialOrder& order);
bool ideal_contains(const std::vector<WeylOperator>& grevlex_basis, const WeylOperator& f);
/// Equality of the left ideals generated by a and b.
bool ideal_equal(const std::vector<WeylOperator>& a, const std::vector<WeylOperator>& b);

/// GB elements together with cofactors in the input generators:
/// basis[i] == sum_j cofactors[i][j] * gens[j]. Requires a well-order.
struct TrackedWeylBasis {
  std::vector<WeylOperator> basis;
  std::vector<std::vector<WeylOperator>> cofactors;
};
TrackedWeylBasis gb_weyl_with_cofactors(const std::vector<WeylOperator>& gens,
                                        const MonomialOrder& order);

/// Integer images sorted under `order`, and back.
gb::ZPoly to_zpoly(const WeylOperator& p, const MonomialOrder& order);
WeylOperator from_zpoly(const WeylRingPtr& ring, const gb::ZPoly& z);

}  // namespace pfano
