#pragma once

#include <set>
#include <string>
#include <vector>

#include "pfano/invariants.hpp"
#include "pfano/rational_function.hpp"
#include "pfano/weyl.hpp"

namespace pfano {

using IntVector = std::vector<long>;

/// Lattice polytope given by its vertices a_1..a_m. The origin is the extra
/// point a_{m+1}; `points()` appends it.
struct LatticePolytope {
  int dim = 0;
  std::vector<IntVector> vertices;

  std::size_t origin_index() const { return vertices.size(); }
  std::vector<IntVector> points() const;
};

/// One row of the smooth Fano table.
struct FanoEntry {
  int dim = 0;
  int index = 0;
  std::vector<IntVector> vertices;
};

/// The embedded table (dimension 2: 5 entries, dimension 3: 18 entries).
const std::vector<FanoEntry>& fano_table();
/// Parses a table in the same JSON layout: [{"dim", "index", "vertices"}].
std::vector<FanoEntry> parse_fano_table(const std::string& json_text);
std::vector<FanoEntry> read_fano_table(const std::string& path);

LatticePolytope load_fano(int dim, int index);
LatticePolytope load_fano(int dim, int index, const std::vector<FanoEntry>& table);

/// Vertex index sets (0-based, ascending) of the facets. Brute force over
/// dim-subsets of vertices; throws when the polytope is not full-dimensional
/// or the origin is not interior.
std::vector<std::vector<int>> facets(const LatticePolytope& p);

/// Simplicial, and the vertices of every facet form a Z-basis.
bool is_smooth_fano(const LatticePolytope& p);

/// Abstract simplicial complex on points 0..points-1, closed under nonempty
/// subsets.
struct Triangulation {
  std::size_t points = 0;
  std::vector<std::vector<int>> maximal;
  std::set<std::vector<int>> faces;

  bool contains(const std::vector<int>& s) const { return faces.count(s) > 0; }
  static Triangulation from_maximal(std::size_t points, std::vector<std::vector<int>> maximal);
};

/// Facets coned over the origin. Throws on non-simplicial facets and on
/// cones that are not unimodular.
Triangulation coned_triangulation(const LatticePolytope& p);

/// Columns are the points a_1..a_{m+1}; the first row is all ones.
IntMatrix gkz_matrix(const LatticePolytope& p);
/// beta = (-1, 0, ..., 0).
std::vector<Rational> period_beta(const LatticePolytope& p);

/// t1..t_dim (integration variables) followed by x1..x_{m+1}.
WeylRingPtr period_ring(const LatticePolytope& p);

/// Shift clearing the negative t-exponents: delta_j = max(0, -min_i a_ij).
IntVector clearing_shift(const LatticePolytope& p);

/// 1/g with g = t^delta * sum_i x_i t^{a_i}. When delta is all ones (every
/// table entry) this is exactly f^{-1} t_1^{-1} .. t_n^{-1}.
RationalFunction integrand(const LatticePolytope& p);

}  // namespace pfano
