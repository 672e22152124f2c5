#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace isotypic {

/// Arbitrary-precision rational number; always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (whitespace allowed around tokens).
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q".
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Canonical p/q (q != 0).
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Integer value of `q` if it fits in a long; throws otherwise.
long to_long(const Rational& q);

}  // namespace isotypic
