#include "pfano/stienstra.hpp"

#include <algorithm>

namespace pfano {

std::vector<std::vector<int>> minimal_nonfaces(const Triangulation& t) {
  // A non-face is minimal when all its facets (codimension one) are faces;
  // its size is at most one more than the largest face.
  std::size_t top = 0;
  for (const auto& s : t.maximal) top = std::max(top, s.size());
  const int n = static_cast<int>(t.points);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto is_face = [&](const std::vector<int>& s) { return s.empty() || t.contains(s); };
  auto rec = [&](auto&& self, int start) -> void {
    if (!cur.empty()) {
      if (!is_face(cur)) {
        bool minimal = true;
        for (std::size_t i = 0; i < cur.size() && minimal; ++i) {
          std::vector<int> sub = cur;
          sub.erase(sub.begin() + static_cast<long>(i));
          minimal = is_face(sub);
        }
        if (minimal) out.push_back(cur);
        return;  // supersets of a non-face are never minimal
      }
      if (cur.size() > top) return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<int> core(const Triangulation& t) {
  if (t.maximal.empty()) return {};
  std::vector<int> acc = t.maximal.front();
  for (const auto& s : t.maximal) {
    std::vector<int> next;
    std::set_intersection(acc.begin(), acc.end(), s.begin(), s.end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

RankBound rank_lower_bound(const IntMatrix& a, const Triangulation& t) {
  const std::size_t l = t.points;
  for (const auto& row : a) {
    if (row.size() != l) throw ContextError("A and the triangulation disagree on the point count");
  }
  RankBound out;
  out.core = core(t);
  out.nonfaces = minimal_nonfaces(t);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= l; ++i) names.push_back("c" + std::to_string(i));
  const auto ring = PolyRing::make(names);
  std::vector<Polynomial> gens;
  for (const auto& row : a) {
    Polynomial p(ring);
    for (std::size_t j = 0; j < l; ++j) {
      if (row[j] != 0) p += Polynomial::variable(ring, static_cast<int>(j)) * Rational(row[j]);
    }
    gens.push_back(p);
  }
  auto monomial_of = [&](const std::vector<int>& s) {
    std::vector<int> e(l, 0);
    for (int i : s) e[static_cast<std::size_t>(i)] = 1;
    return Polynomial::monomial(ring, e);
  };
  for (const auto& s : out.nonfaces) gens.push_back(monomial_of(s));
  const auto g = buchberger(gens);
  std::vector<std::vector<int>> leads;
  for (const auto& p : g) {
    std::vector<int> e(l);
    for (std::size_t j = 0; j < l; ++j) e[j] = p.leading_term().m[static_cast<int>(j)];
    leads.push_back(std::move(e));
  }
  const auto basis = standard_monomials(leads, static_cast<int>(l));
  if (!basis) throw Error("the Stanley-Reisner quotient is infinite-dimensional");
  out.quotient_dim = basis->size();

  // Matrix of multiplication by c_core in the standard monomial basis.
  const Polynomial c = monomial_of(out.core);
  std::vector<std::vector<Rational>> rows;
  for (const auto& b : *basis) {
    const Polynomial image = normal_form(c * Polynomial::monomial(ring, b), g, ring->order());
    std::vector<Rational> row(basis->size(), Rational(0));
    for (const auto& term : image.terms()) {
      std::vector<int> e(l);
      for (std::size_t j = 0; j < l; ++j) e[j] = term.m[static_cast<int>(j)];
      const auto it = std::find(basis->begin(), basis->end(), e);
      row[static_cast<std::size_t>(it - basis->begin())] = term.c;
    }
    rows.push_back(std::move(row));
  }
  // Rank over Q.
  std::size_t rank = 0;
  const std::size_t cols = basis->size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  out.r = rank;
  return out;
}

RankBound rank_lower_bound(const LatticePolytope& p) {
  return rank_lower_bound(gkz_matrix(p), coned_triangulation(p));
}

}  // namespace pfano
