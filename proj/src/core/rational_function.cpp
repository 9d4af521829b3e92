#include "pfano/rational_function.hpp"

#include <algorithm>
#include <numeric>

namespace pfano {
namespace {

// Recursive gcd over Z[x]: split off the content with respect to a main
// variable, then run a primitive pseudo-remainder sequence.

int main_variable(const Polynomial& a, const Polynomial& b) {
  const int n = a.ring()->nvars();
  for (int v = 0; v < n; ++v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return -1;
}

// Coefficients of a as a polynomial in v, indexed by the power of v.
std::vector<Polynomial> coefficients_in(const Polynomial& a, int v) {
  std::vector<TermVec<Rational>> parts(static_cast<std::size_t>(std::max(0, a.degree_in(v)) + 1));
  for (const auto& t : a.terms()) {
    Term<Rational> u = t;
    u.m[v] = 0;
    parts[t.m[v]].push_back(std::move(u));
  }
  std::vector<Polynomial> out;
  for (auto& p : parts) out.emplace_back(a.ring(), std::move(p));
  return out;
}

Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& a, int v) {
  Polynomial c(a.ring());
  for (const auto& k : coefficients_in(a, v)) {
    if (k.is_zero()) continue;
    c = c.is_zero() ? k.primitive() : gcd_primitive(c, k);
    if (c.is_constant()) break;
  }
  return c;
}

Polynomial primitive_part_in(const Polynomial& a, int v) {
  const Polynomial c = content_in(a, v);
  return c.is_constant() ? a.primitive() : exact_quotient(a, c).primitive();
}

Polynomial power_of(const PolyRingPtr& ring, int v, int e) {
  std::vector<int> exps(static_cast<std::size_t>(ring->nvars()), 0);
  exps[static_cast<std::size_t>(v)] = e;
  return Polynomial::monomial(ring, exps);
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, int v) {
  const int db = b.degree_in(v);
  const Polynomial lb = coefficients_in(b, v).back();
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    const Polynomial la = coefficients_in(a, v).back();
    a = lb * a - la * power_of(a.ring(), v, da - db) * b;
  }
  return a;
}

// Both arguments nonzero.
Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b) {
  const PolyRingPtr& ring = a.ring();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(ring, 1);
  const int v = main_variable(a, b);
  if (a.degree_in(v) == 0) return gcd_primitive(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd_primitive(content_in(a, v), b);
  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  const Polynomial c = gcd_primitive(ca, cb);
  Polynomial p = ca.is_constant() ? a.primitive() : exact_quotient(a, ca).primitive();
  Polynomial q = cb.is_constant() ? b.primitive() : exact_quotient(b, cb).primitive();
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (!q.is_zero()) {
    Polynomial r = pseudo_remainder(p, q, v);
    p = std::move(q);
    q = r.is_zero() ? std::move(r) : primitive_part_in(r, v);
  }
  // p is the last nonzero remainder; a v-free one means coprime parts.
  Polynomial g = p.degree_in(v) == 0 ? Polynomial::constant(ring, 1) : primitive_part_in(p, v);
  return (c * g).primitive();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  const PolyRingPtr ring = a.ring() ? a.ring() : b.ring();
  if (a.is_zero()) return b.is_zero() ? Polynomial(ring) : b.primitive();
  if (b.is_zero()) return a.primitive();
  return gcd_primitive(a, b);
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  if (!num_.ring()) num_ = Polynomial(den_.ring());
  if (num_.is_zero()) {
    den_ = Polynomial::constant(den_.ring(), 1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  const Polynomial p = den_.primitive();
  // den = s * p for a rational s
  const Rational s = den_.leading_term().c / p.leading_term().c;
  den_ = p;
  num_ *= Rational(Rational(1) / s);
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
  PolyRingPtr ring = p.ring();
  return RationalFunction(std::move(p), Polynomial::constant(ring, 1));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative(int var) const {
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

DerivativeTable::DerivativeTable(Polynomial f, Polynomial g) : f_(std::move(f)), g_(std::move(g)) {
  if (!f_.ring()) f_ = Polynomial(g_.ring());
  for (int i = 0; i < g_.ring()->nvars(); ++i) dg_.push_back(g_.derivative(i));
  cache_.emplace(std::vector<int>(static_cast<std::size_t>(g_.ring()->nvars()), 0), f_);
}

const Polynomial& DerivativeTable::numerator(const std::vector<int>& alpha) {
  if (auto it = cache_.find(alpha); it != cache_.end()) return it->second;
  // Peel one derivative off the last nonzero index.
  std::vector<int> prev = alpha;
  int var = -1;
  for (int i = static_cast<int>(prev.size()) - 1; i >= 0; --i) {
    if (prev[static_cast<std::size_t>(i)] > 0) {
      var = i;
      break;
    }
  }
  --prev[static_cast<std::size_t>(var)];
  const int k = std::accumulate(prev.begin(), prev.end(), 0) + 1;
  const Polynomial n = numerator(prev);
  // d(N / g^k) = (N' g - k N g') / g^(k+1)
  Polynomial next = n.derivative(var) * g_ - n * dg_[static_cast<std::size_t>(var)] * Rational(k);
  return cache_.emplace(alpha, std::move(next)).first->second;
}

}  // namespace pfano
