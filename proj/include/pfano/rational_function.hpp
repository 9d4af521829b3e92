#pragma once

#include <map>
#include <vector>

#include "pfano/polynomial.hpp"

namespace pfano {

/// Greatest common divisor, normalized to a primitive integer polynomial
/// with positive leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Reduced quotient f/g of polynomials over Q.
///
/// Canonical form: gcd(f, g) = 1 and g is a primitive integer polynomial
/// with positive leading coefficient (so the zero function is 0/1).
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction from_polynomial(Polynomial p);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const PolyRingPtr& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction derivative(int var) const;
  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Memoized derivatives of f/g in the form
///   d^alpha (f/g) = N_alpha / g^(|alpha| + 1)
/// without cancelling common factors.
class DerivativeTable {
 public:
  DerivativeTable(Polynomial f, Polynomial g);

  const Polynomial& numerator(const std::vector<int>& alpha);
  const Polynomial& f() const { return f_; }
  const Polynomial& g() const { return g_; }

 private:
  Polynomial f_;
  Polynomial g_;
  std::vector<Polynomial> dg_;
  std::map<std::vector<int>, Polynomial> cache_;
};

}  // namespace pfano
