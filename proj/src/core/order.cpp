#include "pfano/order.hpp"

#include <numeric>
#include <sstream>

#include "pfano/arith.hpp"

namespace pfano {
namespace {

std::vector<int> all_vars(int nvars) {
  std::vector<int> v(static_cast<std::size_t>(nvars));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

bool separates_all(const std::vector<MonomialOrder::Stage>& stages, int nvars) {
  for (const auto& s : stages) {
    if (s.kind != MonomialOrder::Stage::Kind::kWeight &&
        static_cast<int>(s.vars.size()) == nvars) {
      return true;
    }
  }
  return false;
}

}  // namespace

MonomialOrder::MonomialOrder(int nvars, std::vector<Stage> stages)
    : nvars_(nvars), stages_(std::move(stages)) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw ContextError("monomial order arity out of range: " + std::to_string(nvars));
  }
  for (const auto& s : stages_) {
    if (s.kind == Stage::Kind::kWeight && static_cast<int>(s.weight.size()) != nvars) {
      throw ContextError("weight stage has the wrong length");
    }
    for (int v : s.vars) {
      if (v < 0 || v >= nvars) throw ContextError("stage variable out of range");
    }
  }
  if (!separates_all(stages_, nvars)) {
    stages_.push_back(Stage{Stage::Kind::kLex, {}, all_vars(nvars)});
  }
}

MonomialOrder MonomialOrder::grevlex(int nvars) {
  return MonomialOrder(nvars, {Stage{Stage::Kind::kGrevlex, {}, all_vars(nvars)}});
}

MonomialOrder MonomialOrder::lex(int nvars) {
  return MonomialOrder(nvars, {Stage{Stage::Kind::kLex, {}, all_vars(nvars)}});
}

MonomialOrder MonomialOrder::weighted(std::vector<std::int64_t> weight,
                                      const MonomialOrder& tiebreak) {
  std::vector<Stage> stages;
  stages.push_back(Stage{Stage::Kind::kWeight, std::move(weight), {}});
  stages.insert(stages.end(), tiebreak.stages_.begin(), tiebreak.stages_.end());
  MonomialOrder o(tiebreak.nvars_, std::move(stages));
  o.position_ = tiebreak.position_;
  o.rank_ = tiebreak.rank_;
  return o;
}

MonomialOrder MonomialOrder::block_grevlex(int nvars, std::vector<int> first,
                                           std::vector<int> second) {
  return MonomialOrder(nvars, {Stage{Stage::Kind::kGrevlex, {}, std::move(first)},
                               Stage{Stage::Kind::kGrevlex, {}, std::move(second)}});
}

MonomialOrder MonomialOrder::with_positions(Position rule, std::vector<int> rank) const {
  MonomialOrder o = *this;
  o.position_ = rule;
  o.rank_ = std::move(rank);
  return o;
}

MonomialOrder MonomialOrder::extended(int extra) const {
  std::vector<Stage> stages = stages_;
  for (auto& s : stages) {
    if (s.kind == Stage::Kind::kWeight) s.weight.resize(s.weight.size() + static_cast<std::size_t>(extra), 0);
  }
  MonomialOrder o(nvars_ + extra, std::move(stages));
  o.position_ = position_;
  o.rank_ = rank_;
  return o;
}

int MonomialOrder::compare_positions(std::uint32_t a, std::uint32_t b) const {
  if (a == b) return 0;
  const int ra = a < rank_.size() ? rank_[a] : static_cast<int>(a);
  const int rb = b < rank_.size() ? rank_[b] : static_cast<int>(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  return a < b ? -1 : 1;
}

int MonomialOrder::compare_terms(const Monomial& a, const Monomial& b) const {
  for (const Stage& s : stages_) {
    switch (s.kind) {
      case Stage::Kind::kWeight: {
        std::int64_t wa = 0;
        std::int64_t wb = 0;
        for (int i = 0; i < nvars_; ++i) {
          const std::int64_t w = s.weight[static_cast<std::size_t>(i)];
          if (w != 0) {
            wa += w * a[i];
            wb += w * b[i];
          }
        }
        if (wa != wb) return wa < wb ? -1 : 1;
        break;
      }
      case Stage::Kind::kGrevlex: {
        int da = 0;
        int db = 0;
        for (int v : s.vars) {
          da += a[v];
          db += b[v];
        }
        if (da != db) return da < db ? -1 : 1;
        for (auto it = s.vars.rbegin(); it != s.vars.rend(); ++it) {
          if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
        }
        break;
      }
      case Stage::Kind::kLex: {
        for (int v : s.vars) {
          if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        }
        break;
      }
    }
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (position_) {
    case Position::kNone:
      return compare_terms(a, b);
    case Position::kPot:
      if (int c = compare_positions(a.pos, b.pos); c != 0) return c;
      return compare_terms(a, b);
    case Position::kTop:
      if (int c = compare_terms(a, b); c != 0) return c;
      return compare_positions(a.pos, b.pos);
  }
  return 0;
}

int MonomialOrder::compare(const std::vector<int>& a, const std::vector<int>& b) const {
  if (static_cast<int>(a.size()) != nvars_ || static_cast<int>(b.size()) != nvars_) {
    throw ContextError("monomial arity does not match the order");
  }
  Monomial ma;
  Monomial mb;
  for (int i = 0; i < nvars_; ++i) {
    if (a[static_cast<std::size_t>(i)] < 0 || b[static_cast<std::size_t>(i)] < 0) {
      throw ContextError("negative exponent");
    }
    ma[i] = static_cast<Exponent>(a[static_cast<std::size_t>(i)]);
    mb[i] = static_cast<Exponent>(b[static_cast<std::size_t>(i)]);
  }
  return compare_terms(ma, mb);
}

bool MonomialOrder::is_well_order() const {
  // Negative weights are harmless once an earlier stage grades every variable
  // positively: each degree then holds finitely many monomials.
  for (const Stage& s : stages_) {
    if (s.kind == Stage::Kind::kWeight) {
      bool positive = true;
      for (std::int64_t w : s.weight) {
        if (w < 0) return false;
        if (w == 0) positive = false;
      }
      if (positive) return true;
    } else if (s.kind == Stage::Kind::kGrevlex && static_cast<int>(s.vars.size()) == nvars_) {
      return true;
    }
  }
  return true;
}

std::string MonomialOrder::describe() const {
  std::ostringstream os;
  for (const Stage& s : stages_) {
    switch (s.kind) {
      case Stage::Kind::kWeight:
        os << "weight(";
        for (std::size_t i = 0; i < s.weight.size(); ++i) os << (i ? "," : "") << s.weight[i];
        os << ") ";
        break;
      case Stage::Kind::kGrevlex:
        os << "grevlex[" << s.vars.size() << "] ";
        break;
      case Stage::Kind::kLex:
        os << "lex[" << s.vars.size() << "] ";
        break;
    }
  }
  if (position_ == Position::kPot) os << "POT";
  if (position_ == Position::kTop) os << "TOP";
  return os.str();
}

}  // namespace pfano
