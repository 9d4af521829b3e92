#include "pfano/monomial.hpp"

#include <algorithm>
#include <limits>

#include "pfano/arith.hpp"

namespace pfano {

int total_degree(const Monomial& m, int nvars) {
  int d = 0;
  for (int i = 0; i < nvars; ++i) d += m[i];
  return d;
}

bool is_one(const Monomial& m, int nvars) {
  for (int i = 0; i < nvars; ++i) {
    if (m[i] != 0) return false;
  }
  return true;
}

bool divides(const Monomial& a, const Monomial& b, int nvars) {
  if (a.pos != b.pos) return false;
  for (int i = 0; i < nvars; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a, int nvars) {
  Monomial q;
  for (int i = 0; i < nvars; ++i) q[i] = static_cast<Exponent>(b[i] - a[i]);
  return q;
}

Monomial product(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  r.pos = b.pos;
  for (int i = 0; i < nvars; ++i) {
    const unsigned s = unsigned{a[i]} + unsigned{b[i]};
    if (s > std::numeric_limits<Exponent>::max()) throw Error("exponent overflow");
    r[i] = static_cast<Exponent>(s);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  r.pos = a.pos;
  for (int i = 0; i < nvars; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b, int nvars) {
  for (int i = 0; i < nvars; ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::uint64_t support_mask(const Monomial& m, int nvars) {
  std::uint64_t mask = 0;
  for (int i = 0; i < nvars; ++i) {
    if (m[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  }
  return mask;
}

}  // namespace pfano
