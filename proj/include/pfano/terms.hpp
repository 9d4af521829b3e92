#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "pfano/arith.hpp"
#include "pfano/monomial.hpp"
#include "pfano/order.hpp"

namespace pfano {

template <class C>
struct Term {
  Monomial m;
  C c;
};

/// Sparse sum of terms kept sorted in strictly descending order with no zero
/// coefficients. Which order is a property of the caller.
template <class C>
using TermVec = std::vector<Term<C>>;

/// Multiplication rule for exponent vectors.
///
/// Weyl slots are laid out as x_1..x_n, d_1..d_n and, when homogenized, a
/// central h at slot 2n with d_i x_i = x_i d_i + h^2.
struct Algebra {
  enum class Kind { kCommutative, kWeyl, kHomogenizedWeyl };

  Kind kind = Kind::kCommutative;
  int nvars = 0;
  int pairs = 0;

  static Algebra commutative(int nvars) { return {Kind::kCommutative, nvars, 0}; }
  static Algebra weyl(int n) { return {Kind::kWeyl, 2 * n, n}; }
  static Algebra homogenized_weyl(int n) { return {Kind::kHomogenizedWeyl, 2 * n + 1, n}; }

  bool is_weyl() const { return kind != Kind::kCommutative; }
  int h_slot() const { return 2 * pairs; }
};

/// Expands the product of two monomials (left * right) and passes every
/// resulting (monomial, integer coefficient) to `emit`. The position of the
/// result is taken from `right`.
template <class Emit>
void monomial_product(const Algebra& alg, const Monomial& left, const Monomial& right, Emit&& emit) {
  if (!alg.is_weyl()) {
    emit(product(left, right, alg.nvars), Integer(1));
    return;
  }
  const int n = alg.pairs;
  // Pairs where a derivative of `left` meets a variable of `right`.
  int active[kMaxVars];
  int kmax[kMaxVars];
  int na = 0;
  for (int i = 0; i < n; ++i) {
    const int b = left[n + i];
    const int c = right[i];
    if (b > 0 && c > 0) {
      active[na] = i;
      kmax[na] = std::min(b, c);
      ++na;
    }
  }
  const Monomial base = product(left, right, alg.nvars);
  if (na == 0) {
    emit(base, Integer(1));
    return;
  }
  int k[kMaxVars] = {};
  while (true) {
    Monomial m = base;
    Integer coef = 1;
    int total = 0;
    for (int a = 0; a < na; ++a) {
      const int i = active[a];
      const int ki = k[a];
      if (ki == 0) continue;
      const unsigned long b = left[n + i];
      const unsigned long c = right[i];
      coef *= binomial(b, static_cast<unsigned long>(ki));
      coef *= binomial(c, static_cast<unsigned long>(ki));
      coef *= factorial(static_cast<unsigned long>(ki));
      m[i] = static_cast<Exponent>(m[i] - ki);
      m[n + i] = static_cast<Exponent>(m[n + i] - ki);
      total += ki;
    }
    if (alg.kind == Algebra::Kind::kHomogenizedWeyl && total > 0) {
      m[alg.h_slot()] = static_cast<Exponent>(m[alg.h_slot()] + 2 * total);
    }
    emit(m, coef);
    int a = 0;
    while (a < na && k[a] == kmax[a]) {
      k[a] = 0;
      ++a;
    }
    if (a == na) break;
    ++k[a];
  }
}

/// Sorts descending, merges equal monomials and drops zeros.
template <class C>
void canonicalize(TermVec<C>& t, const MonomialOrder& ord) {
  std::sort(t.begin(), t.end(),
            [&](const Term<C>& a, const Term<C>& b) { return ord.greater(a.m, b.m); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i + 1;
    C sum = t[i].c;
    while (j < t.size() && t[j].m == t[i].m) {
      sum += t[j].c;
      ++j;
    }
    if (sum != 0) {
      t[out].m = t[i].m;
      t[out].c = std::move(sum);
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

/// a*p[pa..] + b*q[qb..] for sorted inputs.
template <class C>
TermVec<C> combine(const C& a, const TermVec<C>& p, std::size_t pa, const C& b, const TermVec<C>& q,
                   std::size_t qb, const MonomialOrder& ord) {
  TermVec<C> r;
  r.reserve(p.size() - pa + q.size() - qb);
  const bool a_one = (a == 1);
  const bool b_one = (b == 1);
  std::size_t i = pa;
  std::size_t j = qb;
  while (i < p.size() && j < q.size()) {
    const int c = ord.compare(p[i].m, q[j].m);
    if (c > 0) {
      r.push_back({p[i].m, a_one ? p[i].c : C(a * p[i].c)});
      ++i;
    } else if (c < 0) {
      r.push_back({q[j].m, b_one ? q[j].c : C(b * q[j].c)});
      ++j;
    } else {
      C s = a * p[i].c + b * q[j].c;
      if (s != 0) r.push_back({p[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) r.push_back({p[i].m, a_one ? p[i].c : C(a * p[i].c)});
  for (; j < q.size(); ++j) r.push_back({q[j].m, b_one ? q[j].c : C(b * q[j].c)});
  return r;
}

template <class C>
TermVec<C> add(const TermVec<C>& p, const TermVec<C>& q, const MonomialOrder& ord) {
  return combine(C(1), p, 0, C(1), q, 0, ord);
}

template <class C>
TermVec<C> subtract(const TermVec<C>& p, const TermVec<C>& q, const MonomialOrder& ord) {
  return combine(C(1), p, 0, C(-1), q, 0, ord);
}

template <class C>
void scale_in_place(TermVec<C>& p, const C& s) {
  if (s == 0) {
    p.clear();
    return;
  }
  for (auto& t : p) t.c *= s;
}

/// (c * u) * g where u is a ring monomial acting from the left.
template <class C>
TermVec<C> left_multiply(const Algebra& alg, const Monomial& u, const C& c, const TermVec<C>& g,
                         const MonomialOrder& ord) {
  TermVec<C> r;
  bool plain = !alg.is_weyl();
  if (!plain) {
    plain = true;
    for (int i = 0; i < alg.pairs; ++i) {
      if (u[alg.pairs + i] != 0) {
        plain = false;
        break;
      }
    }
  }
  if (plain) {
    // Multiplicative orders keep the shifted terms sorted.
    r.reserve(g.size());
    for (const auto& t : g) r.push_back({product(u, t.m, alg.nvars), C(c * t.c)});
    return r;
  }
  r.reserve(g.size() * 2);
  for (const auto& t : g) {
    monomial_product(alg, u, t.m, [&](const Monomial& m, const Integer& k) {
      r.push_back({m, C(c * t.c * k)});
    });
  }
  canonicalize(r, ord);
  return r;
}

template <class C>
TermVec<C> multiply(const Algebra& alg, const TermVec<C>& a, const TermVec<C>& b,
                    const MonomialOrder& ord) {
  TermVec<C> r;
  for (const auto& s : a) {
    for (const auto& t : b) {
      monomial_product(alg, s.m, t.m, [&](const Monomial& m, const Integer& k) {
        r.push_back({m, C(s.c * t.c * k)});
      });
    }
  }
  canonicalize(r, ord);
  return r;
}

}  // namespace pfano
