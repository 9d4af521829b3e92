#pragma once

#include <vector>

#include "pfano/fano.hpp"

namespace pfano {

/// Inclusion-minimal subsets of {0..points-1} that are not faces of t.
std::vector<std::vector<int>> minimal_nonfaces(const Triangulation& t);

/// Intersection of the maximal simplices (empty when there are none).
std::vector<int> core(const Triangulation& t);

struct RankBound {
  std::size_t r = 0;
  /// dim over Q of Q[c]/J, J = <row forms of A> + <c_sigma : sigma a minimal
  /// non-face>.
  std::size_t quotient_dim = 0;
  std::vector<int> core;
  std::vector<std::vector<int>> nonfaces;
};

/// r = dim (R/Ann c_core) = rank of multiplication by c_core on
/// R = Q[c]/J. Throws when R is infinite-dimensional.
RankBound rank_lower_bound(const IntMatrix& a, const Triangulation& t);
/// Uses the GKZ matrix and the coned triangulation.
RankBound rank_lower_bound(const LatticePolytope& p);

}  // namespace pfano
