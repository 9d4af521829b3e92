#include "pfano/fano.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace pfano {
namespace detail {
extern const char* const kPolytopeJson;
}

namespace {

long dot(const IntVector& a, const IntVector& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det.get_num();
}

Integer facet_determinant(const LatticePolytope& p, const std::vector<int>& facet) {
  std::vector<std::vector<Rational>> m;
  for (int i : facet) {
    std::vector<Rational> row;
    for (long x : p.vertices[static_cast<std::size_t>(i)]) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return determinant(std::move(m));
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> c(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      visit(c);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      c[static_cast<std::size_t>(depth)] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<IntVector> LatticePolytope::points() const {
  std::vector<IntVector> out = vertices;
  out.emplace_back(static_cast<std::size_t>(dim), 0);
  return out;
}

std::vector<FanoEntry> parse_fano_table(const std::string& json_text) {
  std::vector<FanoEntry> out;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    for (const auto& row : doc) {
      FanoEntry e;
      e.dim = row.at("dim").get<int>();
      e.index = row.at("index").get<int>();
      e.vertices = row.at("vertices").get<std::vector<IntVector>>();
      for (const auto& v : e.vertices) {
        if (static_cast<int>(v.size()) != e.dim) throw Error("vertex dimension mismatch");
      }
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("bad polytope table: ") + ex.what());
  }
  return out;
}

std::vector<FanoEntry> read_fano_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fano_table(ss.str());
}

const std::vector<FanoEntry>& fano_table() {
  static const std::vector<FanoEntry> table = parse_fano_table(detail::kPolytopeJson);
  return table;
}

LatticePolytope load_fano(int dim, int index, const std::vector<FanoEntry>& table) {
  for (const auto& e : table) {
    if (e.dim == dim && e.index == index) return LatticePolytope{e.dim, e.vertices};
  }
  throw Error("no polytope with dim " + std::to_string(dim) + " and index " + std::to_string(index));
}

LatticePolytope load_fano(int dim, int index) { return load_fano(dim, index, fano_table()); }

std::vector<std::vector<int>> facets(const LatticePolytope& p) {
  const int d = p.dim;
  const int m = static_cast<int>(p.vertices.size());
  if (d < 1 || m < d + 1) throw Error("polytope is not full-dimensional");
  std::set<std::vector<int>> found;
  bool origin_on_boundary = false;
  combinations(m, d, [&](const std::vector<int>& c) {
    const IntVector& p0 = p.vertices[static_cast<std::size_t>(c[0])];
    IntVector normal;
    if (d == 1) {
      normal = {1};
    } else {
      IntMatrix diff;
      for (std::size_t i = 1; i < c.size(); ++i) {
        IntVector row(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
          row[static_cast<std::size_t>(j)] =
              p.vertices[static_cast<std::size_t>(c[i])][static_cast<std::size_t>(j)] -
              p0[static_cast<std::size_t>(j)];
        }
        diff.push_back(std::move(row));
      }
      const auto k = integer_kernel(diff);
      if (k.size() != 1) return;
      normal = k[0];
    }
    long rhs = dot(normal, p0);
    if (rhs < 0) {
      for (auto& x : normal) x = -x;
      rhs = -rhs;
    }
    long lo = 0;
    long hi = 0;
    for (const auto& v : p.vertices) {
      const long s = dot(normal, v) - rhs;
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    if (hi > 0 && lo < 0) return;
    if (rhs == 0) {
      origin_on_boundary = true;
      return;
    }
    if (hi > 0) return;
    std::vector<int> facet;
    for (int i = 0; i < m; ++i) {
      if (dot(normal, p.vertices[static_cast<std::size_t>(i)]) == rhs) facet.push_back(i);
    }
    found.insert(std::move(facet));
  });
  if (origin_on_boundary) throw Error("the origin is not an interior point");
  if (found.empty()) throw Error("polytope is not full-dimensional");
  return {found.begin(), found.end()};
}

bool is_smooth_fano(const LatticePolytope& p) {
  for (const auto& f : facets(p)) {
    if (static_cast<int>(f.size()) != p.dim) return false;
    if (abs(facet_determinant(p, f)) != 1) return false;
  }
  return true;
}

Triangulation Triangulation::from_maximal(std::size_t points, std::vector<std::vector<int>> maximal) {
  Triangulation t;
  t.points = points;
  for (auto& s : maximal) std::sort(s.begin(), s.end());
  std::sort(maximal.begin(), maximal.end());
  t.maximal = std::move(maximal);
  for (const auto& s : t.maximal) {
    const std::size_t k = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) face.push_back(s[i]);
      }
      t.faces.insert(std::move(face));
    }
  }
  return t;
}

Triangulation coned_triangulation(const LatticePolytope& p) {
  std::vector<std::vector<int>> maximal;
  const int origin = static_cast<int>(p.origin_index());
  for (auto f : facets(p)) {
    if (static_cast<int>(f.size()) != p.dim) throw Error("facet is not a simplex");
    if (abs(facet_determinant(p, f)) != 1) throw Error("coned facet is not unimodular");
    f.push_back(origin);
    maximal.push_back(std::move(f));
  }
  return Triangulation::from_maximal(p.vertices.size() + 1, std::move(maximal));
}

IntMatrix gkz_matrix(const LatticePolytope& p) {
  const auto pts = p.points();
  IntMatrix a(static_cast<std::size_t>(p.dim + 1), IntVector(pts.size()));
  for (std::size_t j = 0; j < pts.size(); ++j) {
    a[0][j] = 1;
    for (int i = 0; i < p.dim; ++i) a[static_cast<std::size_t>(i + 1)][j] = pts[j][static_cast<std::size_t>(i)];
  }
  return a;
}

std::vector<Rational> period_beta(const LatticePolytope& p) {
  std::vector<Rational> b(static_cast<std::size_t>(p.dim + 1), Rational(0));
  b[0] = -1;
  return b;
}

WeylRingPtr period_ring(const LatticePolytope& p) {
  std::vector<std::string> names;
  for (int i = 1; i <= p.dim; ++i) names.push_back("t" + std::to_string(i));
  for (std::size_t i = 1; i <= p.vertices.size() + 1; ++i) names.push_back("x" + std::to_string(i));
  return WeylRing::make(names, p.dim);
}

IntVector clearing_shift(const LatticePolytope& p) {
  IntVector delta(static_cast<std::size_t>(p.dim), 0);
  for (const auto& v : p.vertices) {
    for (std::size_t j = 0; j < delta.size(); ++j) delta[j] = std::max(delta[j], -v[j]);
  }
  return delta;
}

RationalFunction integrand(const LatticePolytope& p) {
  if (p.vertices.empty()) throw Error("polytope is not full-dimensional");
  const auto ring = period_ring(p)->coefficient_ring();
  const IntVector delta = clearing_shift(p);
  const auto pts = p.points();
  Polynomial g(ring);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<int> e(static_cast<std::size_t>(ring->nvars()), 0);
    for (int j = 0; j < p.dim; ++j) {
      e[static_cast<std::size_t>(j)] = static_cast<int>(pts[i][static_cast<std::size_t>(j)] + delta[static_cast<std::size_t>(j)]);
    }
    e[static_cast<std::size_t>(p.dim) + i] = 1;
    g += Polynomial::monomial(ring, e);
  }
  return RationalFunction(Polynomial::constant(ring, 1), g);
}

}  // namespace pfano
