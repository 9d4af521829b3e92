#include "pfano/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace pfano {
namespace {

Monomial leading(const WeylOperator& p, const MonomialOrder& order) {
  const Monomial* best = &p.terms().front().m;
  for (const auto& t : p.terms()) {
    if (order.greater(t.m, *best)) best = &t.m;
  }
  return *best;
}

bool has_unit(const std::vector<WeylOperator>& basis) {
  return std::any_of(basis.begin(), basis.end(), [](const WeylOperator& p) {
    return !p.is_zero() && p.size() == 1 && is_one(p.terms().front().m, 2 * p.ring()->n());
  });
}

std::vector<WeylOperator> nonzero(const std::vector<WeylOperator>& gens) {
  std::vector<WeylOperator> out;
  for (const auto& g : gens) {
    if (!g.is_zero()) out.push_back(g);
  }
  return out;
}

// Largest set of variables containing no support in `masks`.
int max_independent(const std::vector<std::uint64_t>& masks, int nvars) {
  int best = 0;
  auto rec = [&](auto&& self, int v, std::uint64_t chosen, int size) -> void {
    if (size + (nvars - v) <= best) return;
    if (v == nvars) {
      best = size;
      return;
    }
    const std::uint64_t with = chosen | (std::uint64_t{1} << v);
    const bool ok = std::none_of(masks.begin(), masks.end(),
                                 [&](std::uint64_t m) { return (m & ~with) == 0; });
    if (ok) self(self, v + 1, with, size + 1);
    self(self, v + 1, chosen, size);
  };
  rec(rec, 0, 0, 0);
  return best;
}

// g = gcd(a, b) = s*a + t*b.
void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

bool homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  const int n = p.ring()->nvars();
  const int d = total_degree(p.terms().front().m, n);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return total_degree(t.m, n) == d; });
}

// Divides out the largest power of variable v common to all terms.
Polynomial strip_variable(const Polynomial& p, int v) {
  if (p.is_zero()) return p;
  int low = p.terms().front().m[v];
  for (const auto& t : p.terms()) low = std::min<int>(low, t.m[v]);
  if (low == 0) return p;
  TermVec<Rational> terms = p.terms();
  for (auto& t : terms) t.m[v] = static_cast<Exponent>(t.m[v] - low);
  return Polynomial(p.ring(), std::move(terms));
}

// I : (x_1 ... x_n)^infinity.
std::vector<Polynomial> saturate(std::vector<Polynomial> gens, const PolyRingPtr& ring) {
  const int n = ring->nvars();
  if (std::all_of(gens.begin(), gens.end(), homogeneous)) {
    // Bayer-Stillman: in grevlex with v smallest, dividing a GB by the
    // largest power of v gives a GB of the saturation by v.
    for (int v = 0; v < n; ++v) {
      std::vector<int> vars;
      for (int i = 0; i < n; ++i) {
        if (i != v) vars.push_back(i);
      }
      vars.push_back(v);
      const MonomialOrder ord(n, {MonomialOrder::Stage{MonomialOrder::Stage::Kind::kGrevlex, {}, vars}});
      auto g = buchberger(gens, ord);
      gens.clear();
      for (const auto& p : g) gens.push_back(strip_variable(p, v));
    }
    return buchberger(gens);
  }
  // Elimination of y from I + <y x_1..x_n - 1>.
  std::vector<std::string> names{"_y"};
  for (const auto& s : ring->names()) names.push_back(s);
  const auto big = PolyRing::make(names);
  std::vector<Polynomial> lifted;
  auto shift = [&](const Polynomial& p) {
    TermVec<Rational> terms;
    for (const auto& t : p.terms()) {
      Term<Rational> u{Monomial{}, t.c};
      for (int i = 0; i < n; ++i) u.m[i + 1] = t.m[i];
      terms.push_back(std::move(u));
    }
    return Polynomial(big, std::move(terms));
  };
  for (const auto& p : gens) lifted.push_back(shift(p));
  std::vector<int> all(static_cast<std::size_t>(n + 1), 1);
  lifted.push_back(Polynomial::monomial(big, all) - Polynomial::constant(big, 1));
  std::vector<int> rest(static_cast<std::size_t>(n));
  std::iota(rest.begin(), rest.end(), 1);
  const auto g = buchberger(lifted, MonomialOrder::block_grevlex(n + 1, {0}, rest));
  std::vector<Polynomial> out;
  for (const auto& p : g) {
    if (p.degree_in(0) > 0) continue;
    TermVec<Rational> terms;
    for (const auto& t : p.terms()) {
      Term<Rational> u{Monomial{}, t.c};
      for (int i = 0; i < n; ++i) u.m[i] = t.m[i + 1];
      terms.push_back(std::move(u));
    }
    out.emplace_back(ring, std::move(terms));
  }
  return buchberger(out);
}

}  // namespace

namespace {

MonomialOrder order_01(const WeylRing& ring) {
  const int n = ring.n();
  std::vector<std::int64_t> w(static_cast<std::size_t>(2 * n), 0);
  std::fill(w.begin() + n, w.end(), 1);
  return MonomialOrder::weighted(w, ring.order());
}

// Principal symbols of a (0,1) basis: they generate in_(0,1)(J) in the
// commutative ring on the same 2n slots.
std::vector<Polynomial> principal_symbols(const std::vector<WeylOperator>& basis,
                                          const WeylRing& ring) {
  const int n = ring.n();
  const auto pr = PolyRing::make(ring.slot_names());
  std::vector<Polynomial> out;
  for (const auto& p : basis) {
    const int top = p.order();
    TermVec<Rational> terms;
    for (const auto& t : p.terms()) {
      int k = 0;
      for (int i = 0; i < n; ++i) k += t.m[n + i];
      if (k == top) terms.push_back(t);
    }
    out.emplace_back(pr, std::move(terms));
  }
  return out;
}

}  // namespace

int characteristic_dimension(const std::vector<WeylOperator>& gens) {
  const auto nz = nonzero(gens);
  if (nz.empty()) return -1;
  const WeylRingPtr ring = nz.front().ring();
  const int n = ring->n();
  const MonomialOrder ord = order_01(*ring);
  const auto g = gb_weyl(nz, ord);
  if (has_unit(g)) return 0;
  std::vector<std::uint64_t> masks;
  for (const auto& p : g) masks.push_back(support_mask(leading(p, ord), 2 * n));
  return max_independent(masks, 2 * n);
}

bool is_holonomic(const std::vector<WeylOperator>& gens) {
  const auto nz = nonzero(gens);
  if (nz.empty()) return false;
  const int d = characteristic_dimension(nz);
  return d == 0 ? true : d == nz.front().ring()->n();
}

std::optional<std::size_t> holonomic_rank(const std::vector<WeylOperator>& gens) {
  const auto nz = nonzero(gens);
  if (nz.empty()) return std::nullopt;
  const WeylRingPtr ring = nz.front().ring();
  const int n = ring->n();
  const auto g = gb_weyl(nz, order_01(*ring));
  // The rank is the number of standard monomials of K(x)[xi] in_(0,1)(J).
  // A commutative basis for the block order with xi first gives them.
  std::vector<int> ds(static_cast<std::size_t>(n));
  std::vector<int> xs(static_cast<std::size_t>(n));
  std::iota(ds.begin(), ds.end(), n);
  std::iota(xs.begin(), xs.end(), 0);
  const MonomialOrder block = MonomialOrder::block_grevlex(2 * n, ds, xs);
  const auto sym = buchberger(principal_symbols(g, *ring), block);
  std::vector<std::vector<int>> lead;
  for (const auto& p : sym) {
    const Monomial* best = &p.terms().front().m;
    for (const auto& t : p.terms()) {
      if (block.greater(t.m, *best)) best = &t.m;
    }
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (*best)[n + i];
    lead.push_back(std::move(v));
  }
  const auto basis = standard_monomials(lead, n);
  if (!basis) return std::nullopt;
  return basis->size();
}

std::optional<std::vector<std::vector<int>>> standard_monomials(
    const std::vector<std::vector<int>>& leads, int n) {
  auto standard = [&](const std::vector<int>& v) {
    return std::none_of(leads.begin(), leads.end(), [&](const std::vector<int>& l) {
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] > v[i]) return false;
      }
      return true;
    });
  };
  // Finite iff every variable has a pure power among the leading monomials.
  for (int i = 0; i < n; ++i) {
    const bool pure = std::any_of(leads.begin(), leads.end(), [&](const std::vector<int>& l) {
      for (int j = 0; j < n; ++j) {
        if (j != i && l[static_cast<std::size_t>(j)] != 0) return false;
      }
      return true;
    });
    if (!pure) return std::nullopt;
  }
  // Standard monomials form an order ideal: walk it, raising only variables
  // at or after the last one raised so each monomial is reached once.
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  auto walk = [&](auto&& self, int from) -> void {
    out.push_back(v);
    for (int i = from; i < n; ++i) {
      ++v[static_cast<std::size_t>(i)];
      if (standard(v)) self(self, i);
      --v[static_cast<std::size_t>(i)];
    }
  };
  if (standard(v)) walk(walk, 0);
  return out;
}

std::vector<std::vector<long>> integer_kernel(const IntMatrix& a) {
  if (a.empty()) return {};
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw ContextError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
  }
  std::vector<std::vector<Integer>> u(cols, std::vector<Integer>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;
  // Column operations on m, mirrored on u, bring m to column echelon form.
  auto combine_cols = [&](std::size_t p, std::size_t j, const Integer& s, const Integer& t,
                          const Integer& x, const Integer& y) {
    // col_p <- s col_p + t col_j, col_j <- x col_p + y col_j
    for (auto* mat : {&m, &u}) {
      for (auto& row : *mat) {
        const Integer cp = row[p];
        const Integer cj = row[j];
        row[p] = s * cp + t * cj;
        row[j] = x * cp + y * cj;
      }
    }
  };
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows && pivot < cols; ++r) {
    for (std::size_t j = pivot + 1; j < cols; ++j) {
      if (m[r][j] == 0) continue;
      Integer g, s, t;
      ext_gcd(m[r][pivot], m[r][j], g, s, t);
      const Integer x = -m[r][j] / g;
      const Integer y = m[r][pivot] / g;
      combine_cols(pivot, j, s, t, x, y);
    }
    if (m[r][pivot] != 0) ++pivot;
  }
  std::vector<std::vector<long>> out;
  for (std::size_t j = pivot; j < cols; ++j) {
    std::vector<long> v(cols);
    for (std::size_t i = 0; i < cols; ++i) {
      if (!u[i][j].fits_slong_p()) throw Error("kernel entry out of range");
      v[i] = u[i][j].get_si();
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Polynomial> toric_ideal(const IntMatrix& a, const PolyRingPtr& ring) {
  const auto kernel = integer_kernel(a);
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  if (static_cast<std::size_t>(ring->nvars()) != cols) throw ContextError("ring does not match A");
  if (kernel.empty()) return {};
  std::vector<Polynomial> gens;
  for (const auto& k : kernel) {
    std::vector<int> plus(cols, 0);
    std::vector<int> minus(cols, 0);
    for (std::size_t i = 0; i < cols; ++i) {
      if (k[i] > 0) plus[i] = static_cast<int>(k[i]);
      if (k[i] < 0) minus[i] = static_cast<int>(-k[i]);
    }
    gens.push_back(Polynomial::monomial(ring, plus) - Polynomial::monomial(ring, minus));
  }
  return saturate(std::move(gens), ring);
}

std::vector<Polynomial> toric_ideal(const IntMatrix& a) {
  std::vector<std::string> names;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t i = 1; i <= cols; ++i) names.push_back("dx" + std::to_string(i));
  return toric_ideal(a, PolyRing::make(names));
}

std::vector<WeylOperator> gkz_system(const IntMatrix& a, const std::vector<Rational>& beta,
                                     const WeylRingPtr& ring) {
  if (beta.size() != a.size()) throw ContextError("beta does not match the rows of A");
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  if (static_cast<std::size_t>(ring->n()) != cols) throw ContextError("ring does not match A");
  std::vector<WeylOperator> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    WeylOperator e = WeylOperator::constant(ring, -beta[i]);
    for (std::size_t j = 0; j < cols; ++j) {
      const int jj = static_cast<int>(j);
      if (a[i][j] != 0) e += WeylOperator::x(ring, jj) * WeylOperator::d(ring, jj) * Rational(a[i][j]);
    }
    out.push_back(e);
  }
  std::vector<std::string> names;
  for (const auto& s : ring->names()) names.push_back("d" + s);
  const std::vector<int> zero(cols, 0);
  for (const auto& b : toric_ideal(a, PolyRing::make(names))) {
    WeylOperator op(ring);
    for (const auto& t : b.terms()) {
      std::vector<int> v(cols);
      for (std::size_t j = 0; j < cols; ++j) v[j] = t.m[static_cast<int>(j)];
      op += WeylOperator::monomial(ring, zero, v, t.c);
    }
    out.push_back(op.primitive());
  }
  return out;
}

std::vector<WeylOperator> gkz_system(const IntMatrix& a, const std::vector<Rational>& beta) {
  std::vector<std::string> names;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t i = 1; i <= cols; ++i) names.push_back("x" + std::to_string(i));
  return gkz_system(a, beta, WeylRing::make(names));
}

}  // namespace pfano
