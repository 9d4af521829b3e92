#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pfano/polynomial.hpp"

namespace pfano {

/// Buchberger engine over integer coefficients for left ideals and left
/// submodules of free modules, in a commutative or (homogenized) Weyl algebra.
///
/// Pairs are processed in order of sugar degree, ties broken by the lcm. The
/// chain criterion (Gebauer-Moeller) is always on; the product criterion is
/// applied only to commutative ideals, where it is valid.
namespace gb {

using ZTerm = Term<Integer>;
using ZPoly = TermVec<Integer>;

struct Stats {
  std::size_t pairs = 0;
  std::size_t zero_reductions = 0;
  std::size_t elements = 0;
};

/// Result of a normal form: `rem` is congruent to `scale * f` modulo the
/// basis.
struct Reduced {
  ZPoly rem;
  Rational scale = 1;
};

class Engine {
 public:
  Engine(Algebra algebra, MonomialOrder order);

  /// Reduced Groebner basis, content-normalized and sorted by ascending
  /// leading monomial.
  std::vector<ZPoly> basis(std::vector<ZPoly> gens, Stats* stats = nullptr) const;

  /// Buchberger restricted to elements whose leading position is below
  /// `pair_limit`. Elements leading at or beyond it are kept unreduced as
  /// they arise and never paired. On an augmented module (g_i, e_i) with
  /// limit 1 they generate the syzygies (Schreyer's lifting), without the
  /// cost of a Groebner basis of the syzygy module.
  std::vector<ZPoly> lift(std::vector<ZPoly> gens, std::uint32_t pair_limit,
                          Stats* stats = nullptr) const;

  /// Full reduction of f by `basis` (leading terms must be current under
  /// this engine's order).
  Reduced reduce(ZPoly f, std::span<const ZPoly> basis) const;
  bool reduces_to_zero(ZPoly f, std::span<const ZPoly> basis) const;

  const Algebra& algebra() const { return algebra_; }
  const MonomialOrder& order() const { return order_; }

  /// Sorts the terms of p into this engine's order.
  void sort(ZPoly& p) const { canonicalize(p, order_); }

 private:
  Algebra algebra_;
  MonomialOrder order_;
};

}  // namespace gb

/// A vector of polynomials: an element of a free module R^rank.
struct ModuleElement {
  std::vector<Polynomial> entries;

  std::size_t rank() const { return entries.size(); }
  bool is_zero() const;
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) = default;
};

/// Reduced Groebner basis of a commutative ideal; zero generators are
/// dropped, so the zero ideal yields an empty basis.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens);

/// Reduced Groebner basis of a submodule. `order` must carry a position
/// rule; positions are the entry indices.
std::vector<ModuleElement> module_gb(const std::vector<ModuleElement>& gens,
                                     const MonomialOrder& order);

/// Generators of Syz(g_1..g_k) as a reduced Groebner basis of the syzygy
/// module under the ring order with POT (slot 0 largest).
std::vector<ModuleElement> syzygy(const std::vector<Polynomial>& gens);

/// Normal form of f modulo a Groebner basis (scaled to rational exactness).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);
ModuleElement normal_form(const ModuleElement& f, const std::vector<ModuleElement>& basis,
                          const MonomialOrder& order);

/// GB of `gens` with each element expressed in the input generators:
/// basis[i] == sum_j cofactors[i][j] * gens[j].
struct TrackedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
};
TrackedBasis buchberger_with_cofactors(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order);

/// Conversions between module elements and position-tagged term vectors.
gb::ZPoly to_zpoly(const ModuleElement& e, const MonomialOrder& order);
ModuleElement from_zpoly(const gb::ZPoly& p, const PolyRingPtr& ring, std::size_t rank);

}  // namespace pfano
