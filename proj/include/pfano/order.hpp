#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfano/monomial.hpp"

namespace pfano {

/// A monomial order built from a chain of comparison stages, optionally
/// extended to free modules by a position rule.
///
/// Stages are applied in sequence: weight rows (dot products), graded reverse
/// lexicographic or lexicographic comparison over a list of variables. A
/// lexicographic stage over all variables is appended when the chain would
/// otherwise fail to separate distinct monomials, so every order is total.
class MonomialOrder {
 public:
  enum class Position { kNone, kPot, kTop };

  struct Stage {
    enum class Kind { kWeight, kGrevlex, kLex };
    Kind kind = Kind::kGrevlex;
    std::vector<std::int64_t> weight;  // kWeight: one entry per variable
    std::vector<int> vars;             // kGrevlex / kLex: variables in order
  };

  MonomialOrder() = default;
  MonomialOrder(int nvars, std::vector<Stage> stages);

  static MonomialOrder grevlex(int nvars);
  static MonomialOrder lex(int nvars);
  /// Compare by the weight first, then by `tiebreak`.
  static MonomialOrder weighted(std::vector<std::int64_t> weight, const MonomialOrder& tiebreak);
  /// Block order: grevlex on `first`, then grevlex on `second`.
  static MonomialOrder block_grevlex(int nvars, std::vector<int> first, std::vector<int> second);

  /// Position-over-term or term-over-position extension. `rank[p]` is the
  /// rank of position p; a higher rank is a larger position.
  [[nodiscard]] MonomialOrder with_positions(Position rule, std::vector<int> rank) const;

  /// Returns -1, 0 or 1.
  int compare(const Monomial& a, const Monomial& b) const;
  /// Checked comparison of plain exponent vectors; throws ContextError when
  /// either length differs from nvars().
  int compare(const std::vector<int>& a, const std::vector<int>& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// True when 1 is the minimum and descending chains are finite: no stage
  /// compares with a negative weight before some stage grades all variables.
  bool is_well_order() const;

  int nvars() const { return nvars_; }
  Position position_rule() const { return position_; }
  const std::vector<int>& position_rank() const { return rank_; }
  const std::vector<Stage>& stages() const { return stages_; }

  /// The same chain acting on `nvars + extra` variables; new variables get
  /// weight 0 and are left out of grevlex/lex stages.
  [[nodiscard]] MonomialOrder extended(int extra) const;

  std::string describe() const;

 private:
  int compare_terms(const Monomial& a, const Monomial& b) const;
  int compare_positions(std::uint32_t a, std::uint32_t b) const;

  int nvars_ = 0;
  std::vector<Stage> stages_;
  Position position_ = Position::kNone;
  std::vector<int> rank_;
};

}  // namespace pfano
