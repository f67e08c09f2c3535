#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lle {

using Integer = mpz_class;
using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Canonical rational from a possibly unreduced pair; denominator made positive.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) {
  return q.get_str();  // "p" or "p/q", canonical
}

// Exact square root of a non-negative perfect-square rational.
bool rational_sqrt(const Rational& q, Rational& out);

}  // namespace lle
