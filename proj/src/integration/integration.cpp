#include "pfano/integration.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

namespace pfano {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const PolyRingPtr& s_ring() {
  static const PolyRingPtr ring = PolyRing::make({"s"});
  return ring;
}

void check_weight(const WeylRing& ring, const WeightVector& w) {
  if (static_cast<int>(w.size()) != ring.n()) throw ContextError("weight vector length mismatch");
  for (int i = 0; i < ring.n(); ++i) {
    const auto wi = w[static_cast<std::size_t>(i)];
    if (i < ring.split() ? wi <= 0 : wi != 0) {
      throw Error("integration weight must be positive on integration variables and 0 elsewhere");
    }
  }
}

// Echelon rows over Q with a record of which powers of s they combine.
struct Row {
  TermVec<Rational> v;
  std::vector<Rational> combo;
};

// All beta in N^m with w.beta <= d, ordered by descending w-degree, then
// lexicographically descending.
std::vector<std::vector<int>> exponents_up_to(const WeightVector& w, int m, long d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  std::vector<int> beta(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int i, long left) -> void {
    if (i == m) {
      out.push_back(beta);
      return;
    }
    const long wi = w[static_cast<std::size_t>(i)];
    for (long k = 0; k * wi <= left; ++k) {
      beta[static_cast<std::size_t>(i)] = static_cast<int>(k);
      self(self, i + 1, left - k * wi);
    }
    beta[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, d);
  auto wdeg = [&](const std::vector<int>& b) {
    long s = 0;
    for (int i = 0; i < m; ++i) s += w[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    return s;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const long da = wdeg(a);
    const long db = wdeg(b);
    if (da != db) return da > db;
    return a > b;
  });
  return out;
}

Integer horner(const std::vector<Integer>& a, const Integer& r) {
  Integer v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * r + a[i];
  return v;
}

}  // namespace

BFunction generic_b_from_basis(const std::vector<WeylOperator>& basis, const WeightVector& w,
                               int max_degree) {
  BFunction out{Polynomial(s_ring()), w};
  std::vector<WeylOperator> in;
  for (const auto& h : basis) {
    if (!h.is_zero()) in.push_back(initial_form(h, w));
  }
  if (in.empty()) return out;
  const WeylRingPtr ring = in.front().ring();
  if (static_cast<int>(w.size()) != ring->n()) throw ContextError("weight vector length mismatch");
  const auto g0 = gb_weyl(in);
  const MonomialOrder& ord = ring->order();

  WeylOperator s(ring);
  for (int i = 0; i < ring->n(); ++i) {
    const auto wi = w[static_cast<std::size_t>(i)];
    if (wi != 0) s += WeylOperator::x(ring, i) * WeylOperator::d(ring, i) * Rational(wi);
  }

  // Rows sorted by descending pivot (leading monomial).
  std::vector<Row> rows;
  WeylOperator power = normal_form(WeylOperator::constant(ring, 1), g0, ord);
  for (int k = 0; k <= max_degree; ++k) {
    if (k > 0) power = normal_form(s * power, g0, ord);
    Row cur{power.terms(), std::vector<Rational>(static_cast<std::size_t>(k + 1), Rational(0))};
    cur.combo[static_cast<std::size_t>(k)] = 1;
    for (const auto& row : rows) {
      const Monomial& p = row.v.front().m;
      auto it = std::find_if(cur.v.begin(), cur.v.end(), [&](const auto& t) { return t.m == p; });
      if (it == cur.v.end()) continue;
      const Rational f = it->c / row.v.front().c;
      cur.v = combine(Rational(1), cur.v, 0, Rational(-f), row.v, 0, ord);
      for (std::size_t j = 0; j < row.combo.size(); ++j) cur.combo[j] -= f * row.combo[j];
    }
    if (cur.v.empty()) {
      Polynomial b(s_ring());
      for (int j = 0; j <= k; ++j) {
        b += Polynomial::monomial(s_ring(), {j}, cur.combo[static_cast<std::size_t>(j)]);
      }
      out.b = b;
      return out;
    }
    auto pos = std::find_if(rows.begin(), rows.end(), [&](const Row& r) {
      return ord.greater(cur.v.front().m, r.v.front().m);
    });
    rows.insert(pos, std::move(cur));
  }
  return out;
}

BFunction generic_b(const std::vector<WeylOperator>& gens, const WeightVector& w, int max_degree) {
  std::vector<WeylOperator> nz;
  for (const auto& g : gens) {
    if (!g.is_zero()) nz.push_back(g);
  }
  if (nz.empty()) return BFunction{Polynomial(s_ring()), w};
  const auto g = gb_weyl(nz, weight_order(*nz.front().ring(), w));
  return generic_b_from_basis(g, w, max_degree);
}

std::optional<long> max_nonneg_int_root(const Polynomial& b) {
  if (b.is_zero()) throw Error("the zero polynomial has every root");
  const int deg = b.total_degree();
  std::vector<Rational> q(static_cast<std::size_t>(deg + 1), Rational(0));
  for (const auto& t : b.terms()) q[t.m[0]] = t.c;
  const Integer den = common_denominator(q);
  std::vector<Integer> a;
  for (const auto& c : q) a.push_back(Integer(c * den));
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (static_cast<int>(low) == deg) return deg > 0 ? std::optional<long>(0) : std::nullopt;

  // Positive roots divide the lowest nonzero coefficient and are bounded by
  // the Cauchy bound.
  Rational bound = 0;
  for (int i = 0; i < deg; ++i) {
    Rational r = Rational(abs(a[static_cast<std::size_t>(i)])) / Rational(abs(a.back()));
    if (r > bound) bound = r;
  }
  bound += 1;
  const Integer tail = abs(a[low]);
  const Integer limit = std::min<Integer>(Integer(bound), tail);
  std::vector<Integer> candidates;
  if (limit <= 1000000) {
    for (Integer r = limit; r >= 1; --r) {
      if (tail % r == 0) candidates.push_back(r);
    }
  } else if (tail.fits_ulong_p() && tail.get_ui() <= 100000000000000UL) {
    const unsigned long t = tail.get_ui();
    for (unsigned long d = 1; d * d <= t; ++d) {
      if (t % d != 0) continue;
      candidates.emplace_back(d);
      candidates.emplace_back(t / d);
    }
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
  } else {
    throw Error("integer root search out of range");
  }
  for (const auto& r : candidates) {
    if (horner(a, r) == 0) {
      if (!r.fits_slong_p()) throw Error("integer root out of range");
      return r.get_si();
    }
  }
  if (low > 0) return 0;
  return std::nullopt;
}

RestrictionData restriction_data(const std::vector<WeylOperator>& basis, const WeightVector& w,
                                 long s0) {
  RestrictionData out;
  out.s0 = s0;
  const WeylRingPtr ring = basis.empty() ? nullptr : basis.front().ring();
  if (!ring) return out;
  check_weight(*ring, w);
  const int n = ring->n();
  const int m = ring->split();
  out.basis = exponents_up_to(w, m, s0);
  out.r = out.basis.size();
  for (const auto& h : basis) {
    if (h.is_zero()) continue;
    const long d = s0 - static_cast<long>(w_order(h, w));
    for (const auto& beta : exponents_up_to(w, m, d)) {
      std::vector<int> v(static_cast<std::size_t>(n), 0);
      std::copy(beta.begin(), beta.end(), v.begin());
      const WeylOperator p =
          WeylOperator::monomial(ring, std::vector<int>(static_cast<std::size_t>(n), 0), v) * h;
      TermVec<Rational> kept;
      for (const auto& t : p.terms()) {
        bool zero = false;
        for (int i = 0; i < m && !zero; ++i) zero = t.m[i] != 0;
        if (!zero) kept.push_back(t);
      }
      out.restricted.emplace_back(ring, std::move(kept));
    }
  }
  return out;
}

std::vector<WeylOperator> integration_ideal(const std::vector<WeylOperator>& gens,
                                            const WeightVector& w, IntegrationReport* report) {
  IntegrationReport local;
  IntegrationReport& rep = report ? *report : local;
  rep = IntegrationReport{};
  std::vector<WeylOperator> nz;
  for (const auto& g : gens) {
    if (!g.is_zero()) nz.push_back(g);
  }
  if (nz.empty()) throw NotHolonomicError("the zero ideal is not holonomic");
  const WeylRingPtr ring = nz.front().ring();
  check_weight(*ring, w);
  const int n = ring->n();
  const int m = ring->split();
  const WeylRingPtr pring = ring->parameter_ring();
  if (m == 0) return gb_weyl(nz);

  auto t0 = Clock::now();
  std::vector<WeylOperator> f;
  for (const auto& g : nz) f.push_back(fourier(g));
  const auto g = gb_weyl(f, weight_order(*ring, w));
  const BFunction bf = generic_b_from_basis(g, w);
  rep.b = bf.b;
  rep.seconds_gb_w = since(t0);
  if (bf.is_zero()) throw NotHolonomicError("the b-function along the integration weight is zero");
  rep.s0 = max_nonneg_int_root(bf.b);
  if (!rep.s0) return {WeylOperator::constant(pring, 1)};

  t0 = Clock::now();
  const RestrictionData rd = restriction_data(g, w, *rep.s0);
  rep.r = rd.r;
  std::map<std::vector<int>, std::uint32_t> slot;
  for (std::size_t i = 0; i < rd.basis.size(); ++i) slot[rd.basis[i]] = static_cast<std::uint32_t>(i);
  const int np = n - m;
  std::vector<int> rank(rd.r);
  for (std::size_t i = 0; i < rd.r; ++i) rank[i] = static_cast<int>(rd.r - i);
  const MonomialOrder mod =
      MonomialOrder::grevlex(2 * np).with_positions(MonomialOrder::Position::kPot, rank);
  std::vector<gb::ZPoly> z;
  for (const auto& b : rd.restricted) {
    const WeylOperator p = fourier_inverse(b);
    if (p.is_zero()) continue;
    TermVec<Rational> terms;
    for (const auto& t : p.terms()) {
      std::vector<int> beta(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        if (t.m[n + i] != 0) throw Error("restricted operator still involves an integration variable");
        beta[static_cast<std::size_t>(i)] = t.m[i];
      }
      auto it = slot.find(beta);
      if (it == slot.end()) throw Error("restricted operator exceeds the b-function bound");
      Term<Rational> u{Monomial{}, t.c};
      for (int i = 0; i < np; ++i) {
        u.m[i] = t.m[m + i];
        u.m[np + i] = t.m[n + m + i];
      }
      u.m.pos = it->second;
      terms.push_back(std::move(u));
    }
    gb::ZPoly zp = to_integer_terms(terms);
    canonicalize(zp, mod);
    z.push_back(std::move(zp));
  }
  rep.seconds_base = since(t0);

  t0 = Clock::now();
  const gb::Engine engine(Algebra::weyl(np), mod);
  const auto mb = engine.basis(std::move(z));
  const auto last = static_cast<std::uint32_t>(rd.r - 1);
  std::vector<WeylOperator> out;
  for (const auto& e : mb) {
    if (e.empty() || e.front().m.pos != last) continue;
    gb::ZPoly p = e;
    for (auto& t : p) t.m.pos = 0;
    out.push_back(from_zpoly(pring, p));
  }
  rep.seconds_gb_final = since(t0);
  return out;
}

std::vector<WeylOperator> integration_ideal(const std::vector<WeylOperator>& gens,
                                            IntegrationReport* report) {
  for (const auto& g : gens) {
    if (!g.ring()) continue;
    WeightVector w(static_cast<std::size_t>(g.ring()->n()), 0);
    for (int i = 0; i < g.ring()->split(); ++i) w[static_cast<std::size_t>(i)] = 1;
    return integration_ideal(gens, w, report);
  }
  throw NotHolonomicError("the zero ideal is not holonomic");
}

}  // namespace pfano
