#pragma once

#include <array>
#include <cstdint>

namespace pfano {

inline constexpr int kMaxVars = 40;
using Exponent = std::uint16_t;

/// Exponent vector plus a module position. Ring elements use position 0.
struct Monomial {
  std::array<Exponent, kMaxVars> exp{};
  std::uint32_t pos = 0;

  Exponent operator[](int i) const { return exp[static_cast<std::size_t>(i)]; }
  Exponent& operator[](int i) { return exp[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

int total_degree(const Monomial& m, int nvars);
bool is_one(const Monomial& m, int nvars);

/// a | b, including equal positions.
bool divides(const Monomial& a, const Monomial& b, int nvars);

/// b / a; the result carries position 0. Requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a, int nvars);

/// Componentwise sum; the position is taken from b. Throws on overflow.
Monomial product(const Monomial& a, const Monomial& b, int nvars);

/// Componentwise max; the position is taken from a.
Monomial lcm(const Monomial& a, const Monomial& b, int nvars);

/// True when no variable occurs in both.
bool coprime(const Monomial& a, const Monomial& b, int nvars);

/// 64-bit support mask used to reject divisibility quickly.
std::uint64_t support_mask(const Monomial& m, int nvars);

}  // namespace pfano
