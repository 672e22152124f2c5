#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isotypic/polynomial.hpp"
#include "isotypic/rational.hpp"

namespace isotypic {

/// A Galois number field L = Q[t]/(p(t)) given together with its full
/// automorphism group (images of t) and a distinguished subgroup whose fixed
/// field plays the role of the character field K.
class NumField {
 public:
  struct Spec {
    QPoly minpoly;
    std::vector<QPoly> automorphisms;            ///< images of t
    std::vector<std::size_t> subfield_fixers;    ///< indices forming Gal(L/K)
    std::vector<std::string> automorphism_names;  ///< optional, same length as automorphisms
    std::map<std::string, QPoly> names;           ///< optional named elements, e.g. "k"
  };

  /// Validates everything: p monic and irreducible, each image a root of p,
  /// the images closed under composition and exactly deg p of them, and the
  /// fixer list a subgroup containing the identity.
  static std::shared_ptr<const NumField> create(Spec spec);

  /// Q itself as the degree-one field Q[t]/(t).
  static std::shared_ptr<const NumField> rationals();

  std::size_t degree() const { return degree_; }
  const QPoly& minpoly() const { return minpoly_; }

  std::size_t automorphism_count() const { return autos_.size(); }
  const QPoly& automorphism_image(std::size_t i) const { return autos_[i].image; }
  const std::string& automorphism_name(std::size_t i) const { return autos_[i].name; }
  std::optional<std::size_t> find_automorphism(const std::string& name) const;
  std::size_t identity_automorphism() const { return identity_; }
  /// Index of sigma_i o sigma_j.
  std::size_t compose(std::size_t i, std::size_t j) const { return compose_[i][j]; }

  /// Gal(L/K) as automorphism indices (identity first).
  const std::vector<std::size_t>& subfield_fixers() const { return fixers_; }
  /// One automorphism per left coset of Gal(L/K): a lift of Gal(K/Q) (identity first).
  std::vector<std::size_t> coset_representatives() const;
  /// [L:K].
  std::size_t relative_degree() const { return fixers_.size(); }

  const std::map<std::string, QPoly>& names() const { return names_; }

  // Coefficient-level arithmetic; inputs have length degree().
  std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  std::vector<Rational> reduce(const QPoly& p) const;
  std::vector<Rational> inverse(const std::vector<Rational>& a) const;
  std::vector<Rational> apply(std::size_t automorphism, const std::vector<Rational>& a) const;

  const Spec& spec() const { return spec_; }

 private:
  struct Automorphism {
    std::string name;
    QPoly image;
    std::vector<std::vector<Rational>> columns;  ///< columns[j] = image^j mod p
  };

  NumField() = default;

  Spec spec_;
  QPoly minpoly_;
  std::size_t degree_ = 0;
  std::vector<Automorphism> autos_;
  std::vector<std::vector<std::size_t>> compose_;
  std::vector<std::size_t> fixers_;
  std::size_t identity_ = 0;
  std::vector<std::vector<Rational>> power_table_;  ///< t^j mod p for j < 2*degree-1
  std::map<std::string, QPoly> names_;
};

using NumFieldPtr = std::shared_ptr<const NumField>;

/// Element of a declared NumField.
class NumFieldValue {
 public:
  explicit NumFieldValue(NumFieldPtr field);
  NumFieldValue(NumFieldPtr field, const Rational& q);
  NumFieldValue(NumFieldPtr field, const QPoly& poly);

  const NumFieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  QPoly as_poly() const { return QPoly(c_); }

  bool is_zero() const;
  bool is_rational() const;
  const Rational& rational_part() const { return c_[0]; }

  NumFieldValue apply(std::size_t automorphism) const;
  NumFieldValue inverse() const;

  NumFieldValue operator-() const;
  NumFieldValue& operator+=(const NumFieldValue& o);
  NumFieldValue& operator-=(const NumFieldValue& o);
  NumFieldValue& operator*=(const NumFieldValue& o);
  NumFieldValue& operator*=(const Rational& s);
  friend NumFieldValue operator+(NumFieldValue a, const NumFieldValue& b) { return a += b; }
  friend NumFieldValue operator-(NumFieldValue a, const NumFieldValue& b) { return a -= b; }
  friend NumFieldValue operator*(NumFieldValue a, const NumFieldValue& b) { return a *= b; }
  friend NumFieldValue operator*(NumFieldValue a, const Rational& s) { return a *= s; }
  friend NumFieldValue operator/(const NumFieldValue& a, const NumFieldValue& b) { return a * b.inverse(); }
  friend bool operator==(const NumFieldValue& a, const NumFieldValue& b) { return a.c_ == b.c_; }

  std::string to_string() const { return as_poly().to_string("t"); }

 private:
  void check_same_field(const NumFieldValue& o) const;

  NumFieldPtr field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const NumFieldValue& v) { return v.is_zero(); }

}  // namespace isotypic
