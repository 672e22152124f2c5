#pragma once

#include <compare>
#include <string>
#include <vector>

#include "isotypic/polynomial.hpp"
#include "isotypic/rational.hpp"

namespace isotypic {

/// Per-level reduction data for Q(zeta_e), shared by every value at that level.
struct CyclotomicContext {
  int level = 1;
  int phi = 1;
  QPoly modulus;  ///< the level-th cyclotomic polynomial
  /// power_basis[k] = zeta^k (0 <= k < level) expressed in the power basis.
  std::vector<std::vector<Rational>> power_basis;

  static const CyclotomicContext& get(int level);
};

/// Exact element of Q(zeta_e) in the power basis {1, zeta, ..., zeta^(phi(e)-1)}
/// reduced modulo the e-th cyclotomic polynomial. Binary operations promote both
/// operands to the lcm of their levels.
class CycValue {
 public:
  CycValue() : CycValue(1) {}
  explicit CycValue(int level);
  CycValue(int level, const Rational& q);
  CycValue(int level, std::vector<Rational> coeffs);

  static CycValue root_of_unity(int level, long k);

  int level() const { return ctx_->level; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant term; meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  /// Re-express at a level divisible by level().
  CycValue at_level(int new_level) const;
  /// Image under the automorphism zeta -> zeta^k (gcd(k, level) must be 1).
  CycValue galois(long k) const;
  CycValue conj() const { return galois(-1); }
  CycValue inverse() const;

  CycValue operator-() const;
  CycValue& operator+=(const CycValue& o);
  CycValue& operator-=(const CycValue& o);
  CycValue& operator*=(const CycValue& o);
  CycValue& operator*=(const Rational& s);
  friend CycValue operator+(CycValue a, const CycValue& b) { return a += b; }
  friend CycValue operator-(CycValue a, const CycValue& b) { return a -= b; }
  friend CycValue operator*(CycValue a, const CycValue& b) { return a *= b; }
  friend CycValue operator*(CycValue a, const Rational& s) { return a *= s; }
  friend CycValue operator/(const CycValue& a, const CycValue& b) { return a * b.inverse(); }
  friend bool operator==(const CycValue& a, const CycValue& b);
  /// Lexicographic order on coefficient vectors (after promotion to a common level).
  friend std::strong_ordering operator<=>(const CycValue& a, const CycValue& b);

  /// Human-readable form, e.g. "2 - w20^3 + 1/2*w20^5".
  std::string to_string() const;

 private:
  CycValue(const CyclotomicContext* ctx, std::vector<Rational> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {}
  static std::vector<Rational> reduce(const CyclotomicContext& ctx, const std::vector<Rational>& raw);

  const CyclotomicContext* ctx_;
  std::vector<Rational> c_;  ///< always length phi(level)
};

inline bool is_zero(const CycValue& v) { return v.is_zero(); }

/// Units of Z/e, ascending.
std::vector<long> unit_group(int level);

/// The subgroup of units k with galois(k) fixing every given value (values are
/// promoted to `level`). Represents the character field K as the fixed field.
std::vector<long> char_field_stabilizer(const std::vector<CycValue>& values, int level);

/// Sum of the distinct conjugates of `a` over the fixed field of `big` starting
/// from the fixed field of `small` (small must be a subgroup of big, both
/// subgroups of the units at `a.level()`). Throws when `a` is not fixed by `small`.
CycValue relative_trace(const CycValue& a, const std::vector<long>& small, const std::vector<long>& big);

/// Trace from the fixed field of `stabilizer` down to Q.
Rational trace_to_rational(const CycValue& a, const std::vector<long>& stabilizer);

}  // namespace isotypic
