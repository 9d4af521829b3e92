#include "pfano/weyl.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace pfano {
namespace {


WeylRingPtr ring_of(const std::vector<WeylOperator>& ops) {
  for (const auto& op : ops) {
    if (op.ring()) return op.ring();
  }
  return nullptr;
}

void check_rings(const std::vector<WeylOperator>& ops, const WeylRingPtr& ring) {
  for (const auto& op : ops) {
    if (op.ring() && op.ring()->names() != ring->names()) {
      throw ContextError("operators belong to different Weyl algebras");
    }
  }
}

}  // namespace

WeylRing::WeylRing(std::vector<std::string> names, int split)
    : names_(std::move(names)), split_(split) {
  const int n = static_cast<int>(names_.size());
  if (2 * n + 1 > kMaxVars) throw ContextError("too many Weyl variables");
  if (split_ < 0 || split_ > n) throw ContextError("integration split out of range");
  slots_ = names_;
  for (const auto& s : names_) slots_.push_back("d" + s);
  order_ = MonomialOrder::grevlex(2 * n);
  coeff_ = PolyRing::make(names_);
}

WeylRingPtr WeylRing::make(std::vector<std::string> names, int split) {
  return WeylRingPtr(new WeylRing(std::move(names), split));
}

int WeylRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

WeylRingPtr WeylRing::parameter_ring() const {
  return make(std::vector<std::string>(names_.begin() + split_, names_.end()), 0);
}

WeylOperator::WeylOperator(WeylRingPtr ring, TermVec<Rational> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  canonicalize(terms_, ring_->order());
}

WeylOperator WeylOperator::constant(WeylRingPtr ring, const Rational& c) {
  TermVec<Rational> t;
  if (c != 0) t.push_back({Monomial{}, c});
  return WeylOperator(std::move(ring), std::move(t));
}

WeylOperator WeylOperator::x(WeylRingPtr ring, int i) {
  Monomial m;
  m[i] = 1;
  TermVec<Rational> t{{m, Rational(1)}};
  return WeylOperator(std::move(ring), std::move(t));
}

WeylOperator WeylOperator::d(WeylRingPtr ring, int i) {
  Monomial m;
  m[ring->n() + i] = 1;
  TermVec<Rational> t{{m, Rational(1)}};
  return WeylOperator(std::move(ring), std::move(t));
}

WeylOperator WeylOperator::monomial(WeylRingPtr ring, const std::vector<int>& u,
                                    const std::vector<int>& v, const Rational& c) {
  const int n = ring->n();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n) {
    throw ContextError("exponent vector length does not match the Weyl algebra");
  }
  Monomial m;
  for (int i = 0; i < n; ++i) {
    m[i] = static_cast<Exponent>(u[static_cast<std::size_t>(i)]);
    m[n + i] = static_cast<Exponent>(v[static_cast<std::size_t>(i)]);
  }
  TermVec<Rational> t;
  if (c != 0) t.push_back({m, c});
  return WeylOperator(std::move(ring), std::move(t));
}

WeylOperator WeylOperator::from_polynomial(WeylRingPtr ring, const Polynomial& p) {
  const auto& names = p.ring()->names();
  std::vector<int> map;
  for (const auto& s : names) {
    const int i = ring->index_of(s);
    if (i < 0) throw ContextError("variable " + s + " is not in the Weyl algebra");
    map.push_back(i);
  }
  TermVec<Rational> t;
  for (const auto& term : p.terms()) {
    Monomial m;
    for (std::size_t j = 0; j < map.size(); ++j) m[map[j]] = term.m[static_cast<int>(j)];
    t.push_back({m, term.c});
  }
  return WeylOperator(std::move(ring), std::move(t));
}

int WeylOperator::order() const {
  if (!ring_) return -1;
  const int n = ring_->n();
  int best = -1;
  for (const auto& t : terms_) {
    int k = 0;
    for (int i = 0; i < n; ++i) k += t.m[n + i];
    best = std::max(best, k);
  }
  return best;
}

void WeylOperator::check_same_ring(const WeylOperator& o) const {
  if (ring_ && o.ring_ && ring_ != o.ring_ && ring_->names() != o.ring_->names()) {
    throw ContextError("operators belong to different Weyl algebras");
  }
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  check_same_ring(o);
  if (!ring_) ring_ = o.ring_;
  if (!ring_) return *this;
  terms_ = add(terms_, o.terms_, ring_->order());
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  check_same_ring(o);
  if (!ring_) ring_ = o.ring_;
  if (!ring_) return *this;
  terms_ = subtract(terms_, o.terms_, ring_->order());
  return *this;
}

WeylOperator& WeylOperator::operator*=(const Rational& s) {
  scale_in_place(terms_, s);
  return *this;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  a.check_same_ring(b);
  const WeylRingPtr ring = a.ring_ ? a.ring_ : b.ring_;
  if (!ring) return {};
  WeylOperator r(ring);
  r.terms_ = multiply(ring->algebra(), a.terms_, b.terms_, ring->order());
  return r;
}

bool operator==(const WeylOperator& a, const WeylOperator& b) {
  a.check_same_ring(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  }
  return true;
}

WeylOperator WeylOperator::primitive() const {
  if (terms_.empty()) return *this;
  TermVec<Integer> z = to_integer_terms(terms_);
  make_primitive(z);
  return WeylOperator(ring_, to_rational_terms(z));
}

std::string WeylOperator::to_string() const {
  return format_terms(terms_, ring_ ? ring_->slot_names() : std::vector<std::string>{});
}

namespace {

// Image of c x^u d^v where for i < split the roles of x_i and d_i swap:
// the result is sign * (left * right) with left holding d^{u_i} (swapped)
// or x^{u_i}, right holding x^{v_i} (swapped) or d^{v_i}.
WeylOperator swap_transform(const WeylOperator& p, bool inverse) {
  const WeylRingPtr& ring = p.ring();
  if (!ring) return p;
  const int n = ring->n();
  const int m = ring->split();
  const Algebra alg = ring->algebra();
  TermVec<Rational> out;
  for (const auto& t : p.terms()) {
    Monomial left;
    Monomial right;
    int sign_exp = 0;
    for (int i = 0; i < n; ++i) {
      const int u = t.m[i];
      const int v = t.m[n + i];
      if (i < m) {
        left[n + i] = static_cast<Exponent>(u);
        right[i] = static_cast<Exponent>(v);
        sign_exp += inverse ? v : u;
      } else {
        left[i] = static_cast<Exponent>(u);
        right[n + i] = static_cast<Exponent>(v);
      }
    }
    const Rational c = (sign_exp % 2 == 0) ? t.c : Rational(-t.c);
    monomial_product(alg, left, right,
                     [&](const Monomial& mono, const Integer& k) { out.push_back({mono, c * k}); });
  }
  return WeylOperator(ring, std::move(out));
}

}  // namespace

WeylOperator fourier(const WeylOperator& p) { return swap_transform(p, false); }
WeylOperator fourier_inverse(const WeylOperator& p) { return swap_transform(p, true); }

RationalFunction apply(const WeylOperator& p, const RationalFunction& phi) {
  const PolyRingPtr& fr = phi.ring();
  if (p.is_zero()) return RationalFunction(Polynomial(fr), Polynomial::constant(fr, 1));
  const WeylRingPtr& ring = p.ring();
  const int n = ring->n();
  std::vector<int> map;
  for (const auto& s : ring->names()) {
    const int i = fr->index_of(s);
    if (i < 0) throw ContextError("operator variable " + s + " does not occur in the function");
    map.push_back(i);
  }
  DerivativeTable table(phi.num(), phi.den());
  const int top = p.order();
  std::vector<Polynomial> gpow{Polynomial::constant(fr, 1)};
  for (int k = 1; k <= top; ++k) gpow.push_back(gpow.back() * phi.den());
  Polynomial num(fr);
  for (const auto& t : p.terms()) {
    std::vector<int> alpha(static_cast<std::size_t>(fr->nvars()), 0);
    std::vector<int> u(static_cast<std::size_t>(fr->nvars()), 0);
    int k = 0;
    for (int i = 0; i < n; ++i) {
      alpha[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = t.m[n + i];
      u[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = t.m[i];
      k += t.m[n + i];
    }
    num += Polynomial::monomial(fr, u, t.c) * table.numerator(alpha) *
           gpow[static_cast<std::size_t>(top - k)];
  }
  return RationalFunction(num, gpow[static_cast<std::size_t>(top)] * phi.den());
}

std::int64_t w_order(const WeylOperator& p, const WeightVector& w) {
  if (p.is_zero()) throw Error("w-order of the zero operator");
  const int n = p.ring()->n();
  if (static_cast<int>(w.size()) != n) throw ContextError("weight vector length mismatch");
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : p.terms()) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) s += w[static_cast<std::size_t>(i)] * (t.m[n + i] - t.m[i]);
    best = std::max(best, s);
  }
  return best;
}

WeylOperator initial_form(const WeylOperator& p, const WeightVector& w) {
  if (p.is_zero()) return p;
  const std::int64_t top = w_order(p, w);
  const int n = p.ring()->n();
  TermVec<Rational> out;
  for (const auto& t : p.terms()) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) s += w[static_cast<std::size_t>(i)] * (t.m[n + i] - t.m[i]);
    if (s == top) out.push_back(t);
  }
  return WeylOperator(p.ring(), std::move(out));
}

MonomialOrder weight_order(const WeylRing& ring, const WeightVector& w) {
  const int n = ring.n();
  if (static_cast<int>(w.size()) != n) throw ContextError("weight vector length mismatch");
  std::vector<std::int64_t> full(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    full[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
    full[static_cast<std::size_t>(n + i)] = w[static_cast<std::size_t>(i)];
  }
  return MonomialOrder::weighted(std::move(full), ring.order());
}

HomogenizedOperator homogenize(const WeylOperator& p) {
  HomogenizedOperator h{p.ring(), p.terms()};
  if (!p.ring()) return h;
  const int slots = 2 * p.ring()->n();
  int top = 0;
  for (const auto& t : p.terms()) top = std::max(top, total_degree(t.m, slots));
  for (auto& t : h.terms) t.m[slots] = static_cast<Exponent>(top - total_degree(t.m, slots));
  return h;
}

WeylOperator dehomogenize(const HomogenizedOperator& p) {
  if (!p.ring) return {};
  const int slots = 2 * p.ring->n();
  TermVec<Rational> t = p.terms;
  for (auto& term : t) term.m[slots] = 0;
  return WeylOperator(p.ring, std::move(t));
}

gb::ZPoly to_zpoly(const WeylOperator& p, const MonomialOrder& order) {
  gb::ZPoly z = to_integer_terms(p.terms());
  canonicalize(z, order);
  return z;
}

WeylOperator from_zpoly(const WeylRingPtr& ring, const gb::ZPoly& z) {
  return WeylOperator(ring, to_rational_terms(z));
}

std::vector<WeylOperator> gb_weyl(const std::vector<WeylOperator>& gens, const MonomialOrder& order,
                                  gb::Stats* stats) {
  const WeylRingPtr ring = ring_of(gens);
  if (!ring) return {};
  check_rings(gens, ring);
  const int n = ring->n();
  if (order.nvars() != 2 * n) throw ContextError("order arity does not match the Weyl algebra");

  std::vector<WeylOperator> out;
  if (order.is_well_order()) {
    gb::Engine engine(Algebra::weyl(n), order);
    std::vector<gb::ZPoly> z;
    for (const auto& g : gens) z.push_back(to_zpoly(g, order));
    for (const auto& b : engine.basis(std::move(z), stats)) out.push_back(from_zpoly(ring, b));
    return out;
  }

  // Total degree including h, then the requested order on the (x, d) slots.
  std::vector<MonomialOrder::Stage> stages;
  stages.push_back({MonomialOrder::Stage::Kind::kWeight,
                    std::vector<std::int64_t>(static_cast<std::size_t>(2 * n + 1), 1),
                    {}});
  const MonomialOrder tail = order.extended(1);
  stages.insert(stages.end(), tail.stages().begin(), tail.stages().end());
  const MonomialOrder hord(2 * n + 1, std::move(stages));
  gb::Engine engine(Algebra::homogenized_weyl(n), hord);
  std::vector<gb::ZPoly> z;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    gb::ZPoly h = to_integer_terms(homogenize(g).terms);
    canonicalize(h, hord);
    z.push_back(std::move(h));
  }
  std::vector<gb::ZPoly> dehom;
  for (const auto& b : engine.basis(std::move(z), stats)) {
    gb::ZPoly d = b;
    for (auto& t : d) t.m[2 * n] = 0;
    canonicalize(d, order);
    if (d.empty()) continue;
    make_primitive(d);
    dehom.push_back(std::move(d));
  }
  std::sort(dehom.begin(), dehom.end(), [&](const gb::ZPoly& a, const gb::ZPoly& b) {
    const int c = order.compare(a.front().m, b.front().m);
    if (c != 0) return c < 0;
    return a.size() < b.size();
  });
  // Drop exact duplicates created by dehomogenization.
  for (std::size_t i = 0; i < dehom.size(); ++i) {
    bool dup = false;
    for (std::size_t j = 0; j < i && !dup; ++j) {
      if (dehom[j].size() != dehom[i].size()) continue;
      dup = std::equal(dehom[j].begin(), dehom[j].end(), dehom[i].begin(),
                       [](const gb::ZTerm& a, const gb::ZTerm& b) { return a.m == b.m && a.c == b.c; });
    }
    if (!dup) out.push_back(from_zpoly(ring, dehom[i]));
  }
  return out;
}

std::vector<WeylOperator> gb_weyl(const std::vector<WeylOperator>& gens) {
  const WeylRingPtr ring = ring_of(gens);
  if (!ring) return {};
  return gb_weyl(gens, ring->order());
}

WeylOperator normal_form(const WeylOperator& f, const std::vector<WeylOperator>& basis,
                         const MonomialOrder& order) {
  if (f.is_zero()) return f;
  const WeylRingPtr& ring = f.ring();
  gb::Engine engine(ring->algebra(), order);
  std::vector<gb::ZPoly> z;
  for (const auto& g : basis) {
    if (!g.is_zero()) z.push_back(to_zpoly(g, order));
  }
  std::vector<Rational> cs;
  for (const auto& t : f.terms()) cs.push_back(t.c);
  const Rational fscale = common_denominator(cs);
  gb::Reduced r = engine.reduce(to_zpoly(f, order), z);
  TermVec<Rational> t = to_rational_terms(r.rem);
  scale_in_place(t, Rational(Rational(1) / (r.scale * fscale)));
  return WeylOperator(ring, std::move(t));
}

bool ideal_contains(const std::vector<WeylOperator>& grevlex_basis, const WeylOperator& f) {
  if (f.is_zero()) return true;
  return normal_form(f, grevlex_basis, f.ring()->order()).is_zero();
}

bool ideal_equal(const std::vector<WeylOperator>& a, const std::vector<WeylOperator>& b) {
  const auto ga = gb_weyl(a);
  const auto gb_ = gb_weyl(b);
  for (const auto& f : b) {
    if (!ideal_contains(ga, f)) return false;
  }
  for (const auto& f : a) {
    if (!ideal_contains(gb_, f)) return false;
  }
  return true;
}

TrackedWeylBasis gb_weyl_with_cofactors(const std::vector<WeylOperator>& gens,
                                        const MonomialOrder& order) {
  TrackedWeylBasis out;
  const WeylRingPtr ring = ring_of(gens);
  if (!ring) return out;
  check_rings(gens, ring);
  const std::size_t k = gens.size();
  std::vector<int> rank(k + 1);
  for (std::size_t i = 0; i <= k; ++i) rank[i] = static_cast<int>(k + 1 - i);
  const MonomialOrder mod = order.with_positions(MonomialOrder::Position::kPot, rank);
  std::vector<gb::ZPoly> z;
  for (std::size_t i = 0; i < k; ++i) {
    TermVec<Rational> all = gens[i].terms();
    Term<Rational> unit{Monomial{}, Rational(1)};
    unit.m.pos = static_cast<std::uint32_t>(i + 1);
    all.push_back(unit);
    gb::ZPoly zi = to_integer_terms(all);
    canonicalize(zi, mod);
    z.push_back(std::move(zi));
  }
  gb::Engine engine(ring->algebra(), mod);
  for (const auto& b : engine.lift(std::move(z), 1)) {
    if (b.front().m.pos != 0) continue;
    std::vector<TermVec<Rational>> parts(k + 1);
    for (const auto& t : b) {
      Term<Rational> u{t.m, Rational(t.c)};
      u.m.pos = 0;
      parts[t.m.pos].push_back(std::move(u));
    }
    out.basis.emplace_back(ring, std::move(parts[0]));
    std::vector<WeylOperator> cof;
    for (std::size_t j = 1; j <= k; ++j) cof.emplace_back(ring, std::move(parts[j]));
    out.cofactors.push_back(std::move(cof));
  }
  return out;
}

}  // namespace pfano
