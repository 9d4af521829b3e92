#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pfano/arith.hpp"
#include "pfano/order.hpp"
#include "pfano/terms.hpp"

namespace pfano {

/// Variables of a commutative polynomial ring over Q.
class PolyRing {
 public:
  static std::shared_ptr<const PolyRing> make(std::vector<std::string> names);

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  /// -1 when absent.
  int index_of(const std::string& name) const;
  /// Ambient grevlex order used for the canonical term layout.
  const MonomialOrder& order() const { return order_; }
  Algebra algebra() const { return Algebra::commutative(nvars()); }

 private:
  explicit PolyRing(std::vector<std::string> names);

  std::vector<std::string> names_;
  MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// descending order of the ring's grevlex order, which makes the
/// representation canonical.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(PolyRingPtr ring, TermVec<Rational> terms);

  static Polynomial constant(PolyRingPtr ring, const Rational& c);
  static Polynomial variable(PolyRingPtr ring, int index);
  static Polynomial monomial(PolyRingPtr ring, const std::vector<int>& exponents,
                             const Rational& c = 1);

  const PolyRingPtr& ring() const { return ring_; }
  const TermVec<Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  int degree_in(int var) const;

  /// Leading term under the ring order; requires a nonzero polynomial.
  const Term<Rational>& leading_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;
  Polynomial derivative(int var) const;

  /// Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;

  std::string to_string() const;

 private:
  void check_same_ring(const Polynomial& o) const;

  PolyRingPtr ring_;
  TermVec<Rational> terms_;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i g_i + r with no term of r divisible by
/// any leading monomial. Requires a well-order.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order);

/// Exact quotient a / b; throws when b does not divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Formats terms using one display name per exponent slot.
std::string format_terms(const TermVec<Rational>& terms, const std::vector<std::string>& slot_names);

/// Integer image: multiplies by the common denominator.
TermVec<Integer> to_integer_terms(const TermVec<Rational>& t);
TermVec<Rational> to_rational_terms(const TermVec<Integer>& t);

/// Divides out the content and makes the leading coefficient positive.
void make_primitive(TermVec<Integer>& t);
Integer content(const TermVec<Integer>& t);

}  // namespace pfano
