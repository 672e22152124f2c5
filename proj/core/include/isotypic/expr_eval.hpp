#pragma once

#include <functional>
#include <map>
#include <string>

#include "isotypic/algebra.hpp"
#include "isotypic/expr.hpp"

namespace isotypic {

/// Symbols and functions available when evaluating scalar expressions over S.
template <class S>
struct ScalarContext {
  S zero;
  std::map<std::string, S> symbols;
  std::map<std::string, std::function<S(const S&)>> functions;
  /// Fallback for symbols not in the map (e.g. "w20"); return false if unknown.
  std::function<bool(const std::string&, S&)> dynamic_symbol;

  bool lookup(const std::string& name, S& out) const {
    auto it = symbols.find(name);
    if (it != symbols.end()) {
      out = it->second;
      return true;
    }
    return dynamic_symbol && dynamic_symbol(name, out);
  }
  std::vector<std::string> known_names() const {
    std::vector<std::string> names;
    for (const auto& [k, v] : symbols) names.push_back(k);
    for (const auto& [k, v] : functions) names.push_back(k);
    return names;
  }
};

template <class S>
class ScalarEnv {
 public:
  explicit ScalarEnv(const ScalarContext<S>& ctx) : ctx_(ctx) {}

  S number(const Rational& q) const { return from_rational_like(ctx_.zero, q); }
  S symbol(const std::string& name) const {
    S out = ctx_.zero;
    if (ctx_.lookup(name, out)) return out;
    auto parts = split_identifier(name, ctx_.known_names());
    if (parts.empty()) throw ValidationError("unknown symbol '" + name + "'");
    S prod = one_like(ctx_.zero);
    for (const auto& p : parts) prod *= symbol(p);
    return prod;
  }
  S call(const std::string& name, const S& arg) const {
    auto it = ctx_.functions.find(name);
    if (it != ctx_.functions.end()) return it->second(arg);
    return symbol(name) * arg;
  }
  S add(S a, const S& b) const { return a += b; }
  S sub(S a, const S& b) const { return a -= b; }
  S mul(S a, const S& b) const { return a *= b; }
  S div(const S& a, const S& b) const {
    if (is_zero(b)) throw ValidationError("division by zero in expression");
    return a * inverse(b);
  }
  S neg(const S& a) const { return -a; }
  S pow(const S& a, long k) const {
    S base = a;
    if (k < 0) {
      if (is_zero(a)) throw ValidationError("division by zero in expression");
      base = inverse(a);
      k = -k;
    }
    S out = one_like(ctx_.zero);
    for (long i = 0; i < k; ++i) out *= base;
    return out;
  }

 private:
  const ScalarContext<S>& ctx_;
};

template <class S>
S evaluate_scalar(const std::string& text, const ScalarContext<S>& ctx) {
  ScalarEnv<S> env(ctx);
  return evaluate_expr<S>(parse_expression(text), env);
}

/// Evaluates group-algebra expressions: group words, scalars, named elements
/// and coefficientwise maps (automorphisms) such as tau(u).
template <class S>
class AlgebraEnv {
 public:
  using Elem = AlgebraElement<S>;

  AlgebraEnv(GroupPtr group, const ScalarContext<S>& scalars, const std::map<std::string, Elem>& named)
      : group_(std::move(group)), scalars_(scalars), named_(named) {}

  Elem number(const Rational& q) const { return scalar_element(from_rational_like(scalars_.zero, q)); }
  Elem symbol(const std::string& name) const {
    if (name == "identity" || name == "id") return Elem::basis(group_, 0, one());
    auto it = named_.find(name);
    if (it != named_.end()) return it->second;
    const auto& gens = group_->generator_names();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i] == name) return Elem::basis(group_, group_->generators()[i], one());
    }
    S value = scalars_.zero;
    if (scalars_.lookup(name, value)) return scalar_element(value);
    std::vector<std::string> known = scalars_.known_names();
    known.insert(known.end(), gens.begin(), gens.end());
    for (const auto& [k, v] : named_) known.push_back(k);
    auto parts = split_identifier(name, known);
    if (parts.empty()) throw ValidationError("unknown symbol '" + name + "'");
    Elem prod = Elem::basis(group_, 0, one());
    for (const auto& p : parts) prod = prod * symbol(p);
    return prod;
  }
  Elem call(const std::string& name, const Elem& arg) const {
    auto it = scalars_.functions.find(name);
    if (it != scalars_.functions.end()) return arg.map(scalars_.zero, it->second);
    return symbol(name) * arg;
  }
  Elem add(Elem a, const Elem& b) const { return a += b; }
  Elem sub(Elem a, const Elem& b) const { return a -= b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(Elem a, const Elem& b) const {
    S s = as_scalar(b, "division by a non-scalar group algebra element");
    if (is_zero(s)) throw ValidationError("division by zero in expression");
    return a.scale(inverse(s));
  }
  Elem neg(const Elem& a) const { return -a; }
  Elem pow(const Elem& a, long k) const {
    Elem base = a;
    if (k < 0) {
      base = invert(a);
      k = -k;
    }
    Elem out = Elem::basis(group_, 0, one());
    for (long i = 0; i < k; ++i) out = out * base;
    return out;
  }

 private:
  S one() const { return one_like(scalars_.zero); }
  Elem scalar_element(const S& s) const {
    Elem e(group_, scalars_.zero);
    e[0] = s;
    return e;
  }
  S as_scalar(const Elem& b, const char* why) const {
    for (Element x = 1; x < group_->order(); ++x) {
      if (!is_zero(b[x])) throw ValidationError(why);
    }
    return b[0];
  }
  /// Inverse of a scalar multiple of a group element.
  Elem invert(const Elem& a) const {
    std::optional<Element> where;
    for (Element x = 0; x < group_->order(); ++x) {
      if (is_zero(a[x])) continue;
      if (where) throw ValidationError("negative power of a group algebra element that is not a monomial");
      where = x;
    }
    if (!where) throw ValidationError("negative power of zero");
    Elem r(group_, scalars_.zero);
    r[group_->inv(*where)] = inverse(a[*where]);
    return r;
  }

  GroupPtr group_;
  const ScalarContext<S>& scalars_;
  const std::map<std::string, Elem>& named_;
};

template <class S>
AlgebraElement<S> evaluate_algebra(const std::string& text, GroupPtr group, const ScalarContext<S>& scalars,
                                   const std::map<std::string, AlgebraElement<S>>& named = {}) {
  AlgebraEnv<S> env(std::move(group), scalars, named);
  return evaluate_expr<AlgebraElement<S>>(parse_expression(text), env);
}

/// Scalar contexts for the standard coefficient types.
ScalarContext<Rational> rational_context();
/// Symbols w<n> (primitive n-th root of unity) plus the given names.
ScalarContext<CycValue> cyclotomic_context(int level, const std::map<std::string, std::string>& names = {});
/// Symbol t, the field's named elements and automorphism names as functions.
ScalarContext<NumFieldValue> numfield_context(const NumFieldPtr& field);

}  // namespace isotypic
