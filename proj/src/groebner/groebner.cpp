#include "pfano/groebner.hpp"

#include <numeric>

namespace pfano {
namespace {

PolyRingPtr ring_of(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) {
    if (g.ring()) return g.ring();
  }
  return nullptr;
}

void check_rings(const std::vector<Polynomial>& gens, const PolyRingPtr& ring) {
  for (const auto& g : gens) {
    if (g.ring() && g.ring()->names() != ring->names()) {
      throw ContextError("generators belong to different rings");
    }
  }
}

gb::ZPoly to_zpoly(const Polynomial& p, const MonomialOrder& order) {
  gb::ZPoly z = to_integer_terms(p.terms());
  canonicalize(z, order);
  return z;
}

Polynomial from_zpoly(const gb::ZPoly& z, const PolyRingPtr& ring) {
  return Polynomial(ring, to_rational_terms(z));
}

std::vector<int> pot_rank(std::size_t rank) {
  // Slot 0 is the largest position.
  std::vector<int> r(rank);
  for (std::size_t i = 0; i < rank; ++i) r[i] = static_cast<int>(rank - i);
  return r;
}

}  // namespace

bool ModuleElement::is_zero() const {
  for (const auto& e : entries) {
    if (!e.is_zero()) return false;
  }
  return true;
}

gb::ZPoly to_zpoly(const ModuleElement& e, const MonomialOrder& order) {
  TermVec<Rational> all;
  for (std::size_t i = 0; i < e.entries.size(); ++i) {
    for (const auto& t : e.entries[i].terms()) {
      Term<Rational> u = t;
      u.m.pos = static_cast<std::uint32_t>(i);
      all.push_back(std::move(u));
    }
  }
  gb::ZPoly z = to_integer_terms(all);
  canonicalize(z, order);
  return z;
}

ModuleElement from_zpoly(const gb::ZPoly& p, const PolyRingPtr& ring, std::size_t rank) {
  std::vector<TermVec<Rational>> parts(rank);
  for (const auto& t : p) {
    if (t.m.pos >= rank) throw ContextError("module position out of range");
    Term<Rational> u{t.m, Rational(t.c)};
    u.m.pos = 0;
    parts[t.m.pos].push_back(std::move(u));
  }
  ModuleElement e;
  for (auto& part : parts) e.entries.emplace_back(ring, std::move(part));
  return e;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  const PolyRingPtr ring = ring_of(gens);
  if (!ring) return {};
  check_rings(gens, ring);
  if (order.nvars() != ring->nvars()) throw ContextError("order arity does not match the ring");
  gb::Engine engine(ring->algebra(), order);
  std::vector<gb::ZPoly> z;
  for (const auto& g : gens) z.push_back(to_zpoly(g, order));
  std::vector<Polynomial> out;
  for (const auto& b : engine.basis(std::move(z))) out.push_back(from_zpoly(b, ring));
  return out;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens) {
  const PolyRingPtr ring = ring_of(gens);
  if (!ring) return {};
  return buchberger(gens, ring->order());
}

std::vector<ModuleElement> module_gb(const std::vector<ModuleElement>& gens,
                                     const MonomialOrder& order) {
  if (gens.empty()) return {};
  const std::size_t rank = gens.front().rank();
  PolyRingPtr ring;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw ContextError("module elements have different ranks");
    for (const auto& e : g.entries) {
      if (!ring && e.ring()) ring = e.ring();
      if (e.ring() && ring && e.ring()->names() != ring->names()) {
        throw ContextError("module entries belong to different rings");
      }
    }
  }
  if (!ring) return {};
  if (order.position_rule() == MonomialOrder::Position::kNone) {
    throw ContextError("module order needs a position rule");
  }
  gb::Engine engine(ring->algebra(), order);
  std::vector<gb::ZPoly> z;
  for (const auto& g : gens) z.push_back(to_zpoly(g, order));
  std::vector<ModuleElement> out;
  for (const auto& b : engine.basis(std::move(z))) out.push_back(from_zpoly(b, ring, rank));
  return out;
}

std::vector<ModuleElement> syzygy(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return {};
  const PolyRingPtr ring = ring_of(gens);
  if (!ring) {
    // All generators are the zero polynomial of no particular ring.
    return {};
  }
  check_rings(gens, ring);
  const std::size_t k = gens.size();
  // (g_i, e_i) in R^{1+k}; elements with a zero first entry span Syz.
  const MonomialOrder order =
      ring->order().with_positions(MonomialOrder::Position::kPot, pot_rank(k + 1));
  std::vector<gb::ZPoly> z;
  for (std::size_t i = 0; i < k; ++i) {
    ModuleElement e;
    e.entries.push_back(gens[i]);
    if (!e.entries[0].ring()) e.entries[0] = Polynomial(ring);
    for (std::size_t j = 0; j < k; ++j) {
      e.entries.push_back(j == i ? Polynomial::constant(ring, 1) : Polynomial(ring));
    }
    z.push_back(to_zpoly(e, order));
  }
  gb::Engine engine(ring->algebra(), order);
  // Lifted syzygies generate. A cheap TOP basis shrinks them before the
  // reduced POT basis; going to POT directly can blow up.
  const MonomialOrder top_order =
      ring->order().with_positions(MonomialOrder::Position::kTop, pot_rank(k));
  const MonomialOrder syz_order =
      ring->order().with_positions(MonomialOrder::Position::kPot, pot_rank(k));
  std::vector<gb::ZPoly> lifted;
  for (auto& b : engine.lift(std::move(z), 1)) {
    if (b.front().m.pos == 0) continue;
    for (auto& t : b) --t.m.pos;
    lifted.push_back(std::move(b));
  }
  std::vector<gb::ZPoly> shrunk = gb::Engine(ring->algebra(), top_order).basis(std::move(lifted));
  for (auto& b : shrunk) canonicalize(b, syz_order);
  gb::Engine syz_engine(ring->algebra(), syz_order);
  std::vector<ModuleElement> out;
  for (const auto& b : syz_engine.basis(std::move(shrunk))) out.push_back(from_zpoly(b, ring, k));
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  const PolyRingPtr& ring = f.ring();
  gb::Engine engine(ring->algebra(), order);
  std::vector<gb::ZPoly> z;
  for (const auto& g : basis) z.push_back(to_zpoly(g, order));
  const Rational fscale = common_denominator(
      [&] {
        std::vector<Rational> cs;
        for (const auto& t : f.terms()) cs.push_back(t.c);
        return cs;
      }());
  gb::Reduced r = engine.reduce(to_zpoly(f, order), z);
  // rem == scale * (fscale * f) modulo the basis.
  TermVec<Rational> t = to_rational_terms(r.rem);
  scale_in_place(t, Rational(Rational(1) / (r.scale * fscale)));
  return Polynomial(ring, std::move(t));
}

ModuleElement normal_form(const ModuleElement& f, const std::vector<ModuleElement>& basis,
                          const MonomialOrder& order) {
  PolyRingPtr ring;
  for (const auto& e : f.entries) {
    if (e.ring()) ring = e.ring();
  }
  if (!ring) return f;
  gb::Engine engine(ring->algebra(), order);
  std::vector<gb::ZPoly> z;
  for (const auto& g : basis) z.push_back(to_zpoly(g, order));
  std::vector<Rational> cs;
  for (const auto& e : f.entries) {
    for (const auto& t : e.terms()) cs.push_back(t.c);
  }
  const Rational fscale = common_denominator(cs);
  gb::Reduced r = engine.reduce(to_zpoly(f, order), z);
  ModuleElement out = from_zpoly(r.rem, ring, f.rank());
  const Rational s = Rational(1) / (r.scale * fscale);
  for (auto& e : out.entries) e *= s;
  return out;
}

TrackedBasis buchberger_with_cofactors(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order) {
  TrackedBasis out;
  const PolyRingPtr ring = ring_of(gens);
  if (!ring) return out;
  check_rings(gens, ring);
  const std::size_t k = gens.size();
  const MonomialOrder mod = order.with_positions(MonomialOrder::Position::kPot, pot_rank(k + 1));
  std::vector<gb::ZPoly> z;
  for (std::size_t i = 0; i < k; ++i) {
    ModuleElement e;
    e.entries.push_back(gens[i].ring() ? gens[i] : Polynomial(ring));
    for (std::size_t j = 0; j < k; ++j) {
      e.entries.push_back(j == i ? Polynomial::constant(ring, 1) : Polynomial(ring));
    }
    z.push_back(to_zpoly(e, mod));
  }
  gb::Engine engine(ring->algebra(), mod);
  for (const auto& b : engine.lift(std::move(z), 1)) {
    if (b.front().m.pos != 0) continue;
    ModuleElement full = from_zpoly(b, ring, k + 1);
    out.basis.push_back(full.entries[0]);
    out.cofactors.emplace_back(full.entries.begin() + 1, full.entries.end());
  }
  return out;
}

}  // namespace pfano
