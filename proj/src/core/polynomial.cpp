#include "pfano/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pfano {

PolyRing::PolyRing(std::vector<std::string> names)
    : names_(std::move(names)), order_(MonomialOrder::grevlex(static_cast<int>(names_.size()))) {}

std::shared_ptr<const PolyRing> PolyRing::make(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) > kMaxVars) {
    throw ContextError("too many variables");
  }
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw ContextError("duplicate variable name");
  return std::shared_ptr<const PolyRing>(new PolyRing(std::move(names)));
}

int PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

Polynomial::Polynomial(PolyRingPtr ring, TermVec<Rational> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  canonicalize(terms_, ring_->order());
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(PolyRingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars()) throw ContextError("variable index out of range");
  Monomial m;
  m[index] = 1;
  Polynomial p(std::move(ring));
  p.terms_.push_back({m, Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const std::vector<int>& exponents,
                                const Rational& c) {
  if (static_cast<int>(exponents.size()) != ring->nvars()) {
    throw ContextError("exponent vector has the wrong length");
  }
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw ContextError("negative exponent");
    m[static_cast<int>(i)] = static_cast<Exponent>(exponents[i]);
  }
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_one(terms_[0].m, ring_->nvars()));
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, pfano::total_degree(t.m, ring_->nvars()));
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int{t.m[var]});
  return d;
}

const Term<Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && ring_ && o.ring_ && ring_->names() != o.ring_->names()) {
    throw ContextError("polynomials belong to different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(o);
  if (!ring_) ring_ = o.ring_;
  if (o.terms_.empty()) return *this;
  terms_ = add(terms_, o.terms_, ring_->order());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(o);
  if (!ring_) ring_ = o.ring_;
  if (o.terms_.empty()) return *this;
  terms_ = subtract(terms_, o.terms_, ring_->order());
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  check_same_ring(o);
  if (!ring_) ring_ = o.ring_;
  terms_ = multiply(ring_->algebra(), terms_, o.terms_, ring_->order());
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  scale_in_place(terms_, s);
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
  }
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  TermVec<Rational> out;
  for (const auto& t : terms_) {
    if (t.m[var] == 0) continue;
    Monomial m = t.m;
    Rational c = t.c * static_cast<long>(m[var]);
    m[var] = static_cast<Exponent>(m[var] - 1);
    out.push_back({m, c});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::primitive() const {
  TermVec<Integer> z = to_integer_terms(terms_);
  make_primitive(z);
  Polynomial r(ring_);
  r.terms_ = to_rational_terms(z);
  return r;
}

std::string Polynomial::to_string() const {
  return format_terms(terms_, ring_ ? ring_->names() : std::vector<std::string>{});
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order) {
  if (!order.is_well_order()) throw Error("division requires a well-order");
  const PolyRingPtr& ring = f.ring();
  const int n = ring->nvars();
  if (order.nvars() != n) throw ContextError("order arity does not match the ring");
  for (const auto& g : divisors) {
    if (g.ring() && g.ring()->names() != ring->names()) throw ContextError("divisor ring mismatch");
  }
  // Work in the requested order, translate back at the end.
  auto sorted = [&](const Polynomial& p) {
    TermVec<Rational> t = p.terms();
    canonicalize(t, order);
    return t;
  };
  std::vector<TermVec<Rational>> gs;
  for (const auto& g : divisors) gs.push_back(sorted(g));
  std::vector<TermVec<Rational>> qs(divisors.size());
  TermVec<Rational> rem;
  TermVec<Rational> p = sorted(f);
  while (!p.empty()) {
    bool reduced = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (gs[i].empty() || !divides(gs[i][0].m, p[0].m, n)) continue;
      const Monomial u = quotient(p[0].m, gs[i][0].m, n);
      const Rational c = p[0].c / gs[i][0].c;
      qs[i].push_back({u, c});
      TermVec<Rational> ug = left_multiply(ring->algebra(), u, c, gs[i], order);
      p = combine(Rational(1), p, 1, Rational(-1), ug, 1, order);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(p[0]);
      p.erase(p.begin());
    }
  }
  DivisionResult out;
  for (auto& q : qs) out.quotients.emplace_back(ring, std::move(q));
  out.remainder = Polynomial(ring, std::move(rem));
  return out;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  DivisionResult d = divide(a, {b}, a.ring()->order());
  if (!d.remainder.is_zero()) throw Error("polynomial division is not exact");
  return d.quotients.front();
}

std::string format_terms(const TermVec<Rational>& terms, const std::vector<std::string>& slot_names) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.c;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? '-' : '+');
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < slot_names.size(); ++i) {
      const int e = t.m[static_cast<int>(i)];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += slot_names[i];
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      os << c.get_str();
    } else if (c == 1) {
      os << mono;
    } else {
      os << c.get_str() << '*' << mono;
    }
  }
  return os.str();
}

TermVec<Integer> to_integer_terms(const TermVec<Rational>& t) {
  Integer l = 1;
  for (const auto& term : t) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.c.get_den_mpz_t());
  TermVec<Integer> out;
  out.reserve(t.size());
  for (const auto& term : t) {
    Integer z = term.c.get_num() * (l / term.c.get_den());
    out.push_back({term.m, std::move(z)});
  }
  return out;
}

TermVec<Rational> to_rational_terms(const TermVec<Integer>& t) {
  TermVec<Rational> out;
  out.reserve(t.size());
  for (const auto& term : t) out.push_back({term.m, Rational(term.c)});
  return out;
}

Integer content(const TermVec<Integer>& t) {
  Integer g = 0;
  for (const auto& term : t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(TermVec<Integer>& t) {
  if (t.empty()) return;
  Integer g = content(t);
  if (t.front().c < 0) g = -g;
  if (g == 1) return;
  for (auto& term : t) mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), g.get_mpz_t());
}

}  // namespace pfano
