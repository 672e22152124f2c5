#pragma once

#include <string>
#include <vector>

#include "isotypic/rational.hpp"

namespace isotypic {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static QPoly monomial(const Rational& c, std::size_t degree);
  static QPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  Rational evaluate(const Rational& at) const;
  /// p(q(t)).
  QPoly compose(const QPoly& inner) const;
  QPoly derivative() const;
  QPoly monic() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct QPolyDivision {
  QPoly quotient;
  QPoly remainder;
};

QPolyDivision divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

/// Inverse of `a` modulo `modulus`; throws ValidationError if gcd(a, modulus) != 1.
QPoly inverse_mod(const QPoly& a, const QPoly& modulus);

/// Exact irreducibility test over Q (squarefree check plus Kronecker's
/// interpolation search for factors of degree <= n/2). Intended for the
/// small-degree fields this library works with; throws ResourceError when
/// the candidate search would exceed `max_candidates`.
bool is_irreducible(const QPoly& p, std::size_t max_candidates = 5'000'000);

/// n-th cyclotomic polynomial (integer coefficients, cached).
const QPoly& cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

}  // namespace isotypic
