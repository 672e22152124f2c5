#pragma once

#include <string>
#include <vector>

#include "isotypic/group.hpp"
#include "isotypic/linalg.hpp"
#include "isotypic/scalar.hpp"

namespace isotypic {

/// Element of the group algebra F[G], stored densely (one coefficient per
/// group element). F is Rational, CycValue or NumFieldValue.
template <class S>
class AlgebraElement {
 public:
  AlgebraElement(GroupPtr group, const S& zero) : group_(std::move(group)), c_(group_->order(), zero_like(zero)) {}

  static AlgebraElement basis(GroupPtr group, Element g, const S& one) {
    AlgebraElement a(std::move(group), one);
    a.c_[g] = one_like(one);
    return a;
  }

  const GroupPtr& group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  const std::vector<S>& coeffs() const { return c_; }
  const S& operator[](Element g) const { return c_[g]; }
  S& operator[](Element g) { return c_[g]; }
  S zero() const { return zero_like(c_[0]); }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (!isotypic::is_zero(x)) return false;
    }
    return true;
  }
  std::size_t support_size() const {
    std::size_t n = 0;
    for (const auto& x : c_) n += isotypic::is_zero(x) ? 0 : 1;
    return n;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    same_group(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!isotypic::is_zero(o.c_[i])) c_[i] += o.c_[i];
    }
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    same_group(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!isotypic::is_zero(o.c_[i])) c_[i] -= o.c_[i];
    }
    return *this;
  }
  AlgebraElement operator-() const {
    AlgebraElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  AlgebraElement& scale(const S& s) {
    for (auto& x : c_) {
      if (!isotypic::is_zero(x)) x *= s;
    }
    return *this;
  }
  AlgebraElement& scale_rational(const Rational& q) {
    for (auto& x : c_) {
      if (!isotypic::is_zero(x)) x *= q;
    }
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.same_group(b);
    const FiniteGroup& g = *a.group_;
    AlgebraElement r(a.group_, a.zero());
    std::vector<Element> bs;
    for (Element y = 0; y < g.order(); ++y) {
      if (!isotypic::is_zero(b.c_[y])) bs.push_back(y);
    }
    for (Element x = 0; x < g.order(); ++x) {
      if (isotypic::is_zero(a.c_[x])) continue;
      for (auto y : bs) r.c_[g.mul(x, y)] += a.c_[x] * b.c_[y];
    }
    return r;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.group_ == b.group_ && a.c_ == b.c_;
  }

  /// g * a.
  AlgebraElement left_translate(Element g) const {
    AlgebraElement r(group_, zero());
    for (Element x = 0; x < group_->order(); ++x) r.c_[group_->mul(g, x)] = c_[x];
    return r;
  }
  /// a * g.
  AlgebraElement right_translate(Element g) const {
    AlgebraElement r(group_, zero());
    for (Element x = 0; x < group_->order(); ++x) r.c_[group_->mul(x, g)] = c_[x];
    return r;
  }

  /// Coefficientwise image under f (field maps, Galois actions, embeddings).
  template <class T, class F>
  AlgebraElement<T> map(const T& zero_of_target, F f) const {
    AlgebraElement<T> r(group_, zero_of_target);
    for (Element x = 0; x < group_->order(); ++x) {
      if (!isotypic::is_zero(c_[x])) r[x] = f(c_[x]);
    }
    return r;
  }

  /// "c*label + ..." in element order; "0" for the zero element.
  std::string to_string() const {
    return to_string([](const S& v) { return scalar_string(v); });
  }
  /// Same with a custom scalar renderer.
  template <class F>
  std::string to_string(F&& render) const {
    std::string out;
    for (Element x = 0; x < group_->order(); ++x) {
      if (isotypic::is_zero(c_[x])) continue;
      std::string coeff = render(c_[x]);
      bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
      bool negative = !compound && coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (!out.empty()) out += negative ? " - " : " + ";
      else if (negative) out += "-";
      if (compound) coeff = "(" + coeff + ")";
      const std::string& label = group_->label(x);
      if (coeff == "1") out += label;
      else out += label == "1" ? coeff : coeff + "*" + label;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void same_group(const AlgebraElement& o) const {
    if (group_ != o.group_) throw InvariantError("group algebra elements of different groups");
  }

  GroupPtr group_;
  std::vector<S> c_;
};

template <class S>
bool is_idempotent(const AlgebraElement<S>& a) {
  return a * a == a;
}

template <class S>
bool are_orthogonal(const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  return (a * b).is_zero() && (b * a).is_zero();
}

/// Commutes with every group element (enough to test the generators).
template <class S>
bool is_central(const AlgebraElement<S>& a) {
  for (auto g : a.group().generators()) {
    if (!(a.left_translate(g) == a.right_translate(g))) return false;
  }
  return true;
}

/// Dimension over the coefficient field of the left ideal F[G] * a.
template <class S>
std::size_t ideal_dim(const AlgebraElement<S>& a) {
  const FiniteGroup& g = a.group();
  EchelonBasis<S> basis(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    basis.insert(a.left_translate(x).coeffs());
    if (basis.rank() == g.order()) break;
  }
  return basis.rank();
}

}  // namespace isotypic
