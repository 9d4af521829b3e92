#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pfano {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when operands live in different rings or have mismatched shapes.
class ContextError : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "a" or "a/b" with optional sign.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// Least common multiple of the denominators; 1 for an empty range.
template <class Range>
Integer common_denominator(const Range& coefficients) {
  Integer l = 1;
  for (const Rational& q : coefficients) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  return l;
}

}  // namespace pfano
