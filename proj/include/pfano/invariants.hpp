#pragma once

#include <optional>
#include <vector>

#include "pfano/weyl.hpp"

namespace pfano {

/// Integer matrix, row-major. For GKZ systems the first row is all ones.
using IntMatrix = std::vector<std::vector<long>>;

/// Dimension of the characteristic variety of D/J: the Krull dimension of
/// in_(0,1)(J), read off the leading monomials of a GB for the (0,1)-weight
/// order refined by grevlex. -1 for the zero ideal; 0 for J = D.
int characteristic_dimension(const std::vector<WeylOperator>& gens);

/// The characteristic variety has dimension n. D itself counts as holonomic.
bool is_holonomic(const std::vector<WeylOperator>& gens);

/// dim over K(x) of R/RJ, R = K(x)<d>: the number of standard monomials of
/// K(x)[xi] in_(0,1)(J), found with a commutative basis of the principal
/// symbols under a block order with xi first. nullopt means infinite
/// (including J = 0).
std::optional<std::size_t> holonomic_rank(const std::vector<WeylOperator>& gens);

/// Exponents not divisible by any of `leads` (vectors of length n), or
/// nullopt when there are infinitely many.
std::optional<std::vector<std::vector<int>>> standard_monomials(
    const std::vector<std::vector<int>>& leads, int n);

/// Integer basis of {u : A u = 0}.
std::vector<std::vector<long>> integer_kernel(const IntMatrix& a);

/// Reduced grevlex basis of the lattice ideal <d^u - d^v : Au = Av> in a ring
/// whose variables stand for the derivatives. Empty when the kernel is 0.
std::vector<Polynomial> toric_ideal(const IntMatrix& a, const PolyRingPtr& ring);
std::vector<Polynomial> toric_ideal(const IntMatrix& a);

/// Euler operators sum_j A_ij x_j d_j - beta_i, then the toric binomials read
/// as operators. `ring` needs one variable per column.
std::vector<WeylOperator> gkz_system(const IntMatrix& a, const std::vector<Rational>& beta,
                                     const WeylRingPtr& ring);
/// Variables x1..xl.
std::vector<WeylOperator> gkz_system(const IntMatrix& a, const std::vector<Rational>& beta);

}  // namespace pfano
