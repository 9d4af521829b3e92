#include "pfano/annihilator.hpp"

#include <algorithm>

namespace pfano {
namespace {

// All exponent vectors of total degree k over n variables, lexicographically
// descending.
void compositions(int n, int k, std::vector<int>& cur, std::size_t at,
                  std::vector<std::vector<int>>& out) {
  if (at + 1 == cur.size()) {
    cur[at] = k;
    out.push_back(cur);
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur[at] = e;
    compositions(n, k - e, cur, at + 1, out);
  }
}

}  // namespace

AnsatzTemplate build_ansatz(const RationalFunction& phi, int order) {
  if (order < 0) throw Error("ansatz order must be non-negative");
  AnsatzTemplate t;
  t.order = order;
  const int n = phi.ring()->nvars();
  for (int k = order; k >= 0; --k) {
    if (n == 0) {
      if (k == 0) t.alphas.emplace_back();
      continue;
    }
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    compositions(n, k, cur, 0, t.alphas);
  }
  DerivativeTable table(phi.num(), phi.den());
  std::vector<Polynomial> gpow{Polynomial::constant(phi.ring(), 1)};
  for (int k = 1; k <= order; ++k) gpow.push_back(gpow.back() * phi.den());
  for (const auto& alpha : t.alphas) {
    int k = 0;
    for (int e : alpha) k += e;
    t.coefficients.push_back(table.numerator(alpha) * gpow[static_cast<std::size_t>(order - k)]);
  }
  return t;
}

std::vector<WeylOperator> approx_ann(const RationalFunction& phi, int order, const WeylRingPtr& ring) {
  if (ring->names() != phi.ring()->names()) {
    throw ContextError("Weyl algebra and rational function use different variables");
  }
  if (order == 0 || phi.is_zero()) {
    // Order-0 annihilators are polynomials a with a*phi = 0.
    if (phi.is_zero()) return {WeylOperator::constant(ring, 1)};
    return {};
  }
  const AnsatzTemplate t = build_ansatz(phi, order);
  const auto syz = syzygy(t.coefficients);
  const int n = ring->n();
  std::vector<WeylOperator> out;
  for (const auto& s : syz) {
    TermVec<Rational> terms;
    for (std::size_t k = 0; k < s.entries.size(); ++k) {
      for (const auto& term : s.entries[k].terms()) {
        Term<Rational> u = term;
        for (int i = 0; i < n; ++i) u.m[n + i] = static_cast<Exponent>(t.alphas[k][static_cast<std::size_t>(i)]);
        terms.push_back(std::move(u));
      }
    }
    WeylOperator op(ring, std::move(terms));
    if (!op.is_zero()) out.push_back(op.primitive());
  }
  std::sort(out.begin(), out.end(), [&](const WeylOperator& a, const WeylOperator& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
      const int c = ring->order().compare(ta[i].m, tb[i].m);
      if (c != 0) return c < 0;
      if (ta[i].c != tb[i].c) return ta[i].c < tb[i].c;
    }
    return ta.size() < tb.size();
  });
  return out;
}

std::vector<WeylOperator> approx_ann(const RationalFunction& phi, int order) {
  return approx_ann(phi, order, WeylRing::make(phi.ring()->names()));
}

}  // namespace pfano
