#include "isotypic/numfield.hpp"

#include <algorithm>
#include <set>

#include "isotypic/errors.hpp"

namespace isotypic {

std::shared_ptr<const NumField> NumField::create(Spec spec) {
  std::shared_ptr<NumField> f(new NumField());
  const QPoly& p = spec.minpoly;
  if (p.degree() < 1 || p.leading() != 1) throw ValidationError("not a field: minimal polynomial must be monic of degree >= 1");
  if (!is_irreducible(p)) throw ValidationError("not a field: " + p.to_string() + " is reducible over Q");
  f->minpoly_ = p;
  f->degree_ = static_cast<std::size_t>(p.degree());
  const std::size_t n = f->degree_;

  f->power_table_.reserve(2 * n);
  for (std::size_t j = 0; j + 1 < 2 * n || j == 0; ++j) {
    f->power_table_.push_back(f->reduce(QPoly::monomial(1, j)));
  }

  if (spec.automorphisms.size() != n) {
    throw ValidationError("L/Q not Galois as declared: " + std::to_string(spec.automorphisms.size()) +
                          " automorphisms for a degree-" + std::to_string(n) + " field");
  }
  if (!spec.automorphism_names.empty() && spec.automorphism_names.size() != n) {
    throw ValidationError("automorphism_names must name every automorphism");
  }
  const QPoly t_mod = QPoly::x() % p;
  std::set<std::vector<Rational>> seen;
  bool have_identity = false;
  for (std::size_t i = 0; i < n; ++i) {
    Automorphism a;
    a.image = spec.automorphisms[i] % p;
    a.name = spec.automorphism_names.empty() ? "sigma" + std::to_string(i) : spec.automorphism_names[i];
    if (!(p.compose(a.image) % p).is_zero()) {
      throw ValidationError("L/Q not Galois as declared: image " + a.image.to_string() + " is not a root of " +
                            p.to_string());
    }
    if (!seen.insert(a.image.coeffs()).second) throw ValidationError("L/Q not Galois as declared: repeated automorphism");
    QPoly power(Rational(1));
    for (std::size_t j = 0; j < n; ++j) {
      a.columns.push_back(f->reduce(power));
      power = (power * a.image) % p;
    }
    if (a.image == t_mod && !have_identity) {
      have_identity = true;
      f->identity_ = i;
    }
    f->autos_.push_back(std::move(a));
  }
  if (!have_identity) throw ValidationError("L/Q not Galois as declared: identity automorphism missing");

  f->compose_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // sigma_i(sigma_j(t)) = image_j evaluated at image_i
      QPoly img = f->autos_[j].image.compose(f->autos_[i].image) % p;
      auto it = std::find_if(f->autos_.begin(), f->autos_.end(), [&](const Automorphism& a) { return a.image == img; });
      if (it == f->autos_.end()) throw ValidationError("L/Q not Galois as declared: automorphisms not closed under composition");
      f->compose_[i][j] = static_cast<std::size_t>(it - f->autos_.begin());
    }
  }

  std::vector<std::size_t> fixers = spec.subfield_fixers;
  if (fixers.empty()) fixers.push_back(f->identity_);
  std::set<std::size_t> fixer_set(fixers.begin(), fixers.end());
  for (std::size_t i : fixer_set) {
    if (i >= n) throw ValidationError("subfield fixer index out of range");
  }
  if (!fixer_set.count(f->identity_)) throw ValidationError("subfield fixers must contain the identity");
  for (std::size_t i : fixer_set) {
    for (std::size_t j : fixer_set) {
      if (!fixer_set.count(f->compose_[i][j])) throw ValidationError("subfield fixers are not closed under composition");
    }
  }
  f->fixers_.push_back(f->identity_);
  for (std::size_t i : fixer_set) {
    if (i != f->identity_) f->fixers_.push_back(i);
  }

  for (const auto& [name, poly] : spec.names) f->names_[name] = poly % p;
  f->spec_ = std::move(spec);
  return f;
}

std::shared_ptr<const NumField> NumField::rationals() {
  static const std::shared_ptr<const NumField> q = [] {
    Spec s;
    s.minpoly = QPoly::x();
    s.automorphisms = {QPoly::x()};
    s.automorphism_names = {"id"};
    return create(std::move(s));
  }();
  return q;
}

std::optional<std::size_t> NumField::find_automorphism(const std::string& name) const {
  for (std::size_t i = 0; i < autos_.size(); ++i) {
    if (autos_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> NumField::coset_representatives() const {
  std::vector<std::size_t> reps;
  std::set<std::size_t> covered;
  auto consider = [&](std::size_t i) {
    if (covered.count(i)) return;
    reps.push_back(i);
    for (std::size_t h : fixers_) covered.insert(compose_[i][h]);
  };
  consider(identity_);
  for (std::size_t i = 0; i < autos_.size(); ++i) consider(i);
  return reps;
}

std::vector<Rational> NumField::reduce(const QPoly& poly) const {
  QPoly r = poly % minpoly_;
  std::vector<Rational> out = r.coeffs();
  out.resize(degree_);
  return out;
}

std::vector<Rational> NumField::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  const std::size_t n = degree_;
  std::vector<Rational> raw(2 * n - 1);
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(b[j])) continue;
      raw[i + j] += a[i] * b[j];
      any = true;
    }
  }
  std::vector<Rational> out(n);
  if (!any) return out;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (is_zero(raw[k])) continue;
    if (k < n) {
      out[k] += raw[k];
      continue;
    }
    const auto& pk = power_table_[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_zero(pk[i])) out[i] += raw[k] * pk[i];
    }
  }
  return out;
}

std::vector<Rational> NumField::inverse(const std::vector<Rational>& a) const {
  QPoly inv = inverse_mod(QPoly(a), minpoly_);
  std::vector<Rational> out = inv.coeffs();
  out.resize(degree_);
  return out;
}

std::vector<Rational> NumField::apply(std::size_t automorphism, const std::vector<Rational>& a) const {
  const auto& cols = autos_.at(automorphism).columns;
  std::vector<Rational> out(degree_);
  for (std::size_t j = 0; j < degree_; ++j) {
    if (is_zero(a[j])) continue;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (!is_zero(cols[j][i])) out[i] += a[j] * cols[j][i];
    }
  }
  return out;
}

NumFieldValue::NumFieldValue(NumFieldPtr field) : field_(std::move(field)), c_(field_->degree()) {}

NumFieldValue::NumFieldValue(NumFieldPtr field, const Rational& q) : NumFieldValue(std::move(field)) { c_[0] = q; }

NumFieldValue::NumFieldValue(NumFieldPtr field, const QPoly& poly) : field_(std::move(field)) {
  c_ = field_->reduce(poly);
}

bool NumFieldValue::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return isotypic::is_zero(q); });
}

bool NumFieldValue::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return isotypic::is_zero(q); });
}

NumFieldValue NumFieldValue::apply(std::size_t automorphism) const {
  NumFieldValue r(field_);
  r.c_ = field_->apply(automorphism, c_);
  return r;
}

NumFieldValue NumFieldValue::inverse() const {
  if (is_zero()) throw ValidationError("division by zero in number field");
  NumFieldValue r(field_);
  r.c_ = field_->inverse(c_);
  return r;
}

void NumFieldValue::check_same_field(const NumFieldValue& o) const {
  if (field_ != o.field_) throw ValidationError("arithmetic between values of different number fields");
}

NumFieldValue NumFieldValue::operator-() const {
  NumFieldValue r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

NumFieldValue& NumFieldValue::operator+=(const NumFieldValue& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NumFieldValue& NumFieldValue::operator-=(const NumFieldValue& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

NumFieldValue& NumFieldValue::operator*=(const NumFieldValue& o) {
  check_same_field(o);
  if (o.is_rational()) return *this *= o.c_[0];
  c_ = field_->multiply(c_, o.c_);
  return *this;
}

NumFieldValue& NumFieldValue::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

}  // namespace isotypic
