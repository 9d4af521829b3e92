#include <algorithm>
#include <cstdint>
#include <tuple>

#include "pfano/groebner.hpp"

namespace pfano::gb {
namespace {

struct Element {
  ZPoly p;
  Monomial lm;
  std::uint64_t mask = 0;
  int sugar = 0;
  bool active = true;
};

struct Pair {
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial lcm;
  int sugar = 0;
};

struct Divisor {
  const ZPoly* p;
  std::uint64_t mask;
};

// Sum of sorted term vectors of geometrically growing length. Each bucket
// carries a pending scalar factor and a read offset, so scaling the whole sum
// and dropping a leading term are O(number of buckets).
class Geobucket {
 public:
  explicit Geobucket(const MonomialOrder& ord) : ord_(ord) {}

  // this += b * q[from..]
  void add(ZPoly q, const Integer& b, std::size_t from = 0) {
    if (q.size() <= from) return;
    std::size_t len = q.size() - from;
    std::size_t i = slot(len);
    ZPoly cur = (from == 0 && b == 1) ? std::move(q) : combine(Integer(0), ZPoly{}, 0, b, q, from, ord_);
    while (true) {
      if (i >= buckets_.size()) buckets_.resize(i + 1);
      Bucket& k = buckets_[i];
      if (k.size() == 0) {
        k.p = std::move(cur);
        k.start = 0;
        k.f = 1;
      } else {
        k.p = combine(k.f, k.p, k.start, Integer(1), cur, 0, ord_);
        k.start = 0;
        k.f = 1;
      }
      if (k.size() <= capacity(i)) return;
      cur = std::move(k.p);
      k.p.clear();
      k.start = 0;
      ++i;
    }
  }

  // Leading monomial and coefficient; false when the sum is zero.
  bool lead(Monomial& m, Integer& c) {
    while (true) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        const Bucket& k = buckets_[i];
        if (k.size() == 0) continue;
        if (best < 0 || ord_.compare(k.head().m, buckets_[static_cast<std::size_t>(best)].head().m) > 0) {
          best = static_cast<int>(i);
        }
      }
      if (best < 0) return false;
      m = buckets_[static_cast<std::size_t>(best)].head().m;
      c = 0;
      hits_.clear();
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        Bucket& k = buckets_[i];
        if (k.size() == 0 || !(k.head().m == m)) continue;
        c += k.f * k.head().c;
        hits_.push_back(i);
      }
      if (c != 0) return true;
      pop();
    }
  }

  // Drops the monomial found by the last lead().
  void pop() {
    for (std::size_t i : hits_) ++buckets_[i].start;
    hits_.clear();
  }

  void scale(const Integer& a) {
    for (Bucket& k : buckets_) k.f *= a;
  }

  // gcd of all coefficients here and in `extra`; 0 when everything is zero.
  Integer content(const ZPoly& extra) {
    Integer g = 0;
    for (const auto& t : extra) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) return g;
    }
    for (Bucket& k : buckets_) {
      if (k.size() == 0) continue;
      flatten(k);
      for (std::size_t i = k.start; i < k.p.size(); ++i) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.p[i].c.get_mpz_t());
        if (g == 1) return g;
      }
    }
    return g;
  }

  void divide(const Integer& h) {
    for (Bucket& k : buckets_) {
      flatten(k);
      for (std::size_t i = k.start; i < k.p.size(); ++i) {
        mpz_divexact(k.p[i].c.get_mpz_t(), k.p[i].c.get_mpz_t(), h.get_mpz_t());
      }
    }
  }

 private:
  struct Bucket {
    ZPoly p;
    std::size_t start = 0;
    Integer f = 1;
    std::size_t size() const { return p.size() - start; }
    const ZTerm& head() const { return p[start]; }
  };

  static std::size_t capacity(std::size_t i) { return std::size_t{8} << (2 * i); }
  static std::size_t slot(std::size_t len) {
    std::size_t i = 0;
    while (len > capacity(i)) ++i;
    return i;
  }
  static void flatten(Bucket& k) {
    if (k.f == 1) return;
    for (std::size_t i = k.start; i < k.p.size(); ++i) k.p[i].c *= k.f;
    k.f = 1;
  }

  const MonomialOrder& ord_;
  std::vector<Bucket> buckets_;
  std::vector<std::size_t> hits_;
};

class Reducer {
 public:
  // Terms at positions >= `limit` are carried along but never reduced.
  Reducer(const Algebra& alg, const MonomialOrder& ord,
          std::uint32_t limit = ~std::uint32_t{0})
      : alg_(alg), ord_(ord), limit_(limit) {}

  void add(const ZPoly* p) {
    if (p->empty()) return;
    divisors_.push_back({p, support_mask(p->front().m, alg_.nvars)});
  }

  const ZPoly* find(const Monomial& m) const {
    const std::uint64_t mask = support_mask(m, alg_.nvars);
    for (const Divisor& d : divisors_) {
      if ((d.mask & ~mask) != 0) continue;
      if (divides(d.p->front().m, m, alg_.nvars)) return d.p;
    }
    return nullptr;
  }

  Reduced reduce(ZPoly p) const {
    Reduced out;
    ZPoly& rem = out.rem;
    Geobucket acc(ord_);
    acc.add(std::move(p), Integer(1));
    int steps = 0;
    Monomial m;
    Integer c;
    while (acc.lead(m, c)) {
      const ZPoly* g = m.pos >= limit_ ? nullptr : find(m);
      if (g == nullptr) {
        acc.pop();
        rem.push_back({m, std::move(c)});
        continue;
      }
      const Monomial u = quotient(m, g->front().m, alg_.nvars);
      Integer a = g->front().c;
      Integer b = std::move(c);
      Integer d;
      mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
      if (a < 0) {
        a = -a;
        b = -b;
      }
      acc.pop();
      if (a != 1) {
        acc.scale(a);
        for (auto& t : rem) t.c *= a;
        out.scale *= a;
      }
      ZPoly ug = left_multiply(alg_, u, Integer(1), *g, ord_);
      acc.add(std::move(ug), -b, 1);
      if (++steps % 16 == 0) {
        Integer h = acc.content(rem);
        if (h > 1) {
          acc.divide(h);
          for (auto& t : rem) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), h.get_mpz_t());
          out.scale /= h;
        }
      }
    }
    Integer h = acc.content(rem);
    if (h > 1) {
      for (auto& t : rem) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), h.get_mpz_t());
      out.scale /= h;
    }
    return out;
  }

 private:
  const Algebra& alg_;
  const MonomialOrder& ord_;
  std::uint32_t limit_;
  std::vector<Divisor> divisors_;
};

class Builder {
 public:
  Builder(const Algebra& alg, const MonomialOrder& ord, std::uint32_t pair_limit)
      : alg_(alg),
        ord_(ord),
        product_criterion_(!alg.is_weyl() && ord.position_rule() == MonomialOrder::Position::kNone),
        pair_limit_(pair_limit) {}

  std::vector<ZPoly> run(std::vector<ZPoly> gens, Stats* stats) {
    std::stable_sort(gens.begin(), gens.end(), [&](const ZPoly& a, const ZPoly& b) {
      if (a.empty() || b.empty()) return !a.empty() && b.empty();
      return ord_.less(a.front().m, b.front().m);
    });
    for (ZPoly& g : gens) {
      if (g.empty()) continue;
      Reduced r = reducer().reduce(std::move(g));
      if (r.rem.empty()) continue;
      make_primitive(r.rem);
      const int s = degree(r.rem);
      insert(std::move(r.rem), s);
    }
    while (!pairs_.empty()) {
      const std::size_t k = select();
      Pair pr = pairs_[k];
      pairs_[k] = pairs_.back();
      pairs_.pop_back();
      ++stats_.pairs;
      ZPoly s = spoly(pr);
      if (s.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      Reduced r = reducer().reduce(std::move(s));
      if (r.rem.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      make_primitive(r.rem);
      insert(std::move(r.rem), std::max(pr.sugar, degree(r.rem)));
    }
    std::vector<ZPoly> out = finish();
    stats_.elements = out.size();
    if (stats != nullptr) *stats = stats_;
    return out;
  }

 private:
  int degree(const ZPoly& p) const {
    int d = 0;
    for (const auto& t : p) d = std::max(d, total_degree(t.m, alg_.nvars));
    return d;
  }

  Reducer reducer() const {
    Reducer r(alg_, ord_, pair_limit_);
    for (const Element& e : elems_) {
      if (e.active && e.lm.pos < pair_limit_) r.add(&e.p);
    }
    return r;
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      const int c = ord_.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    return best;
  }

  ZPoly spoly(const Pair& pr) const {
    const Element& a = elems_[pr.i];
    const Element& b = elems_[pr.j];
    const Monomial ua = quotient(pr.lcm, a.lm, alg_.nvars);
    const Monomial ub = quotient(pr.lcm, b.lm, alg_.nvars);
    Integer ca = b.p.front().c;
    Integer cb = a.p.front().c;
    Integer d;
    mpz_gcd(d.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    mpz_divexact(ca.get_mpz_t(), ca.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(cb.get_mpz_t(), cb.get_mpz_t(), d.get_mpz_t());
    ZPoly pa = left_multiply(alg_, ua, Integer(1), a.p, ord_);
    ZPoly pb = left_multiply(alg_, ub, Integer(1), b.p, ord_);
    Integer ncb = -cb;
    return combine(ca, pa, 1, ncb, pb, 1, ord_);
  }

  // Gebauer-Moeller installation of a new element.
  void insert(ZPoly h, int sugar) {
    Element e;
    e.lm = h.front().m;
    e.mask = support_mask(e.lm, alg_.nvars);
    e.sugar = sugar;
    e.p = std::move(h);
    const std::size_t k = elems_.size();
    const int hdeg = total_degree(e.lm, alg_.nvars);
    if (e.lm.pos >= pair_limit_) {
      // Kept only as a reducer: no pairs, and it retires nothing.
      elems_.push_back(std::move(e));
      return;
    }

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < k; ++i) {
      const Element& g = elems_[i];
      if (!g.active || g.lm.pos != e.lm.pos) continue;
      cands.push_back({i, lcm(g.lm, e.lm, alg_.nvars),
                       product_criterion_ && coprime(g.lm, e.lm, alg_.nvars), true});
    }
    // Drop candidates whose lcm is a proper multiple of another lcm.
    for (auto& c : cands) {
      for (const auto& o : cands) {
        if (&o == &c || !o.keep) continue;
        if (divides(o.lcm, c.lcm, alg_.nvars) && !(o.lcm == c.lcm)) {
          c.keep = false;
          break;
        }
      }
    }
    // Among equal lcms keep one; drop the whole class if any member is coprime.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      bool any_coprime = cands[a].coprime;
      for (std::size_t b = a + 1; b < cands.size(); ++b) {
        if (cands[b].keep && cands[b].lcm == cands[a].lcm) {
          any_coprime = any_coprime || cands[b].coprime;
          cands[b].keep = false;
        }
      }
      if (any_coprime) cands[a].keep = false;
    }
    // Chain criterion on existing pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (Pair& p : pairs_) {
      if (p.lcm.pos == e.lm.pos && divides(e.lm, p.lcm, alg_.nvars)) {
        const Monomial l1 = lcm(elems_[p.i].lm, e.lm, alg_.nvars);
        const Monomial l2 = lcm(elems_[p.j].lm, e.lm, alg_.nvars);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (const auto& c : cands) {
      if (!c.keep) continue;
      const Element& g = elems_[c.i];
      const int ldeg = total_degree(c.lcm, alg_.nvars);
      const int s = std::max(g.sugar + ldeg - total_degree(g.lm, alg_.nvars), sugar + ldeg - hdeg);
      pairs_.push_back({c.i, k, c.lcm, s});
    }
    for (Element& g : elems_) {
      if (g.active && divides(e.lm, g.lm, alg_.nvars)) g.active = false;
    }
    elems_.push_back(std::move(e));
  }

  std::vector<ZPoly> finish() {
    std::vector<std::size_t> idx;
    std::vector<ZPoly> frozen;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!elems_[i].active) continue;
      if (elems_[i].lm.pos >= pair_limit_) {
        frozen.push_back(elems_[i].p);
      } else {
        idx.push_back(i);
      }
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return ord_.less(elems_[a].lm, elems_[b].lm);
    });
    std::vector<ZPoly> out;
    out.reserve(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      Reducer r(alg_, ord_, pair_limit_);
      for (std::size_t b = 0; b < idx.size(); ++b) {
        if (b != a) r.add(&elems_[idx[b]].p);
      }
      Reduced red = r.reduce(elems_[idx[a]].p);
      make_primitive(red.rem);
      out.push_back(std::move(red.rem));
    }
    for (ZPoly& f : frozen) out.push_back(std::move(f));
    return out;
  }

  const Algebra& alg_;
  const MonomialOrder& ord_;
  bool product_criterion_;
  std::uint32_t pair_limit_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  Stats stats_;
};

}  // namespace

Engine::Engine(Algebra algebra, MonomialOrder order)
    : algebra_(algebra), order_(std::move(order)) {
  if (order_.nvars() != algebra_.nvars) {
    throw ContextError("order arity does not match the algebra");
  }
  if (!order_.is_well_order()) {
    throw Error("Buchberger's algorithm requires a well-order");
  }
}

std::vector<ZPoly> Engine::basis(std::vector<ZPoly> gens, Stats* stats) const {
  for (ZPoly& g : gens) sort(g);
  Builder b(algebra_, order_, ~std::uint32_t{0});
  return b.run(std::move(gens), stats);
}

std::vector<ZPoly> Engine::lift(std::vector<ZPoly> gens, std::uint32_t pair_limit,
                                Stats* stats) const {
  for (ZPoly& g : gens) sort(g);
  Builder b(algebra_, order_, pair_limit);
  return b.run(std::move(gens), stats);
}

Reduced Engine::reduce(ZPoly f, std::span<const ZPoly> basis) const {
  Reducer r(algebra_, order_);
  for (const ZPoly& g : basis) r.add(&g);
  sort(f);
  return r.reduce(std::move(f));
}

bool Engine::reduces_to_zero(ZPoly f, std::span<const ZPoly> basis) const {
  return reduce(std::move(f), basis).rem.empty();
}

}  // namespace pfano::gb
