#include "isotypic/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "isotypic/errors.hpp"

namespace isotypic {

const CyclotomicContext& CyclotomicContext::get(int level) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicContext>> registry;
  if (level < 1) throw ValidationError("cyclotomic level must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[level];
  if (!slot) {
    auto ctx = std::make_unique<CyclotomicContext>();
    ctx->level = level;
    ctx->modulus = cyclotomic_polynomial(level);
    ctx->phi = static_cast<int>(ctx->modulus.degree());
    const auto phi = static_cast<std::size_t>(ctx->phi);
    std::vector<Rational> v(phi);
    v[0] = 1;
    for (int k = 0; k < level; ++k) {
      ctx->power_basis.push_back(v);
      // multiply by zeta and fold the degree-phi term back with the (monic) modulus
      Rational top = v[phi - 1];
      for (std::size_t i = phi - 1; i > 0; --i) v[i] = v[i - 1];
      v[0] = 0;
      if (!is_zero(top)) {
        for (std::size_t i = 0; i < phi; ++i) v[i] -= top * ctx->modulus.coeff(i);
      }
    }
    slot = std::move(ctx);
  }
  return *slot;
}

CycValue::CycValue(int level) : ctx_(&CyclotomicContext::get(level)) {
  c_.resize(static_cast<std::size_t>(ctx_->phi));
}

CycValue::CycValue(int level, const Rational& q) : CycValue(level) { c_[0] = q; }

CycValue::CycValue(int level, std::vector<Rational> coeffs) : ctx_(&CyclotomicContext::get(level)) {
  c_ = reduce(*ctx_, coeffs);
}

CycValue CycValue::root_of_unity(int level, long k) {
  const auto& ctx = CyclotomicContext::get(level);
  long r = ((k % level) + level) % level;
  return CycValue(&ctx, ctx.power_basis[static_cast<std::size_t>(r)]);
}

std::vector<Rational> CycValue::reduce(const CyclotomicContext& ctx, const std::vector<Rational>& raw) {
  const auto phi = static_cast<std::size_t>(ctx.phi);
  std::vector<Rational> out(phi);
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (isotypic::is_zero(raw[j])) continue;
    if (j < phi) {
      out[j] += raw[j];
      continue;
    }
    const auto& zk = ctx.power_basis[j % static_cast<std::size_t>(ctx.level)];
    for (std::size_t i = 0; i < phi; ++i) {
      if (!isotypic::is_zero(zk[i])) out[i] += raw[j] * zk[i];
    }
  }
  return out;
}

bool CycValue::is_zero() const {
  for (const auto& c : c_) {
    if (!isotypic::is_zero(c)) return false;
  }
  return true;
}

bool CycValue::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!isotypic::is_zero(c_[i])) return false;
  }
  return true;
}

CycValue CycValue::at_level(int new_level) const {
  if (new_level == level()) return *this;
  if (new_level % level() != 0) {
    throw ValidationError("cannot move a level-" + std::to_string(level()) + " value to level " +
                          std::to_string(new_level));
  }
  const auto& ctx = CyclotomicContext::get(new_level);
  const long step = new_level / level();
  std::vector<Rational> raw(static_cast<std::size_t>(ctx.level));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!isotypic::is_zero(c_[j])) raw[(j * static_cast<std::size_t>(step)) % raw.size()] += c_[j];
  }
  return CycValue(&ctx, reduce(ctx, raw));
}

CycValue CycValue::galois(long k) const {
  const long e = level();
  long r = ((k % e) + e) % e;
  if (std::gcd(r, e) != 1) {
    throw ValidationError("galois_apply: " + std::to_string(k) + " is not a unit modulo " + std::to_string(e));
  }
  std::vector<Rational> raw(static_cast<std::size_t>(e));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!isotypic::is_zero(c_[j])) raw[(j * static_cast<std::size_t>(r)) % static_cast<std::size_t>(e)] += c_[j];
  }
  return CycValue(ctx_, reduce(*ctx_, raw));
}

CycValue CycValue::inverse() const {
  if (is_zero()) throw ValidationError("division by zero in Q(zeta_" + std::to_string(level()) + ")");
  QPoly inv = inverse_mod(QPoly(c_), ctx_->modulus);
  std::vector<Rational> out = inv.coeffs();
  out.resize(c_.size());
  return CycValue(ctx_, std::move(out));
}

namespace {

int common_level(const CycValue& a, const CycValue& b) { return std::lcm(a.level(), b.level()); }

}  // namespace

CycValue CycValue::operator-() const {
  CycValue r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycValue& CycValue::operator+=(const CycValue& o) {
  if (o.ctx_ != ctx_) {
    int l = common_level(*this, o);
    *this = at_level(l);
    return *this += o.at_level(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycValue& CycValue::operator-=(const CycValue& o) {
  if (o.ctx_ != ctx_) {
    int l = common_level(*this, o);
    *this = at_level(l);
    return *this -= o.at_level(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycValue& CycValue::operator*=(const CycValue& o) {
  if (o.ctx_ != ctx_) {
    int l = common_level(*this, o);
    *this = at_level(l);
    return *this *= o.at_level(l);
  }
  if (o.is_rational()) return *this *= o.c_[0];
  if (is_rational()) {
    Rational s = c_[0];
    *this = o;
    return *this *= s;
  }
  std::vector<Rational> raw(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (isotypic::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (!isotypic::is_zero(o.c_[j])) raw[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = reduce(*ctx_, raw);
  return *this;
}

CycValue& CycValue::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

bool operator==(const CycValue& a, const CycValue& b) {
  if (a.ctx_ == b.ctx_) return a.c_ == b.c_;
  int l = common_level(a, b);
  return a.at_level(l).c_ == b.at_level(l).c_;
}

std::strong_ordering operator<=>(const CycValue& a, const CycValue& b) {
  if (a.ctx_ != b.ctx_) {
    int l = common_level(a, b);
    return a.at_level(l) <=> b.at_level(l);
  }
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CycValue::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (isotypic::is_zero(c)) continue;
    Rational mag = abs(c);
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    if (i == 0) {
      out << isotypic::to_string(mag);
      continue;
    }
    if (mag != 1) out << isotypic::to_string(mag) << "*";
    out << "w" << level();
    if (i > 1) out << "^" << i;
  }
  return first ? "0" : out.str();
}

std::vector<long> unit_group(int level) {
  std::vector<long> units;
  for (long k = 1; k <= level; ++k) {
    if (std::gcd(k, static_cast<long>(level)) == 1) units.push_back(k % level == 0 ? 0 : k);
  }
  if (level == 1) return {0};
  return units;
}

std::vector<long> char_field_stabilizer(const std::vector<CycValue>& values, int level) {
  std::vector<CycValue> lifted;
  lifted.reserve(values.size());
  for (const auto& v : values) lifted.push_back(v.at_level(level));
  std::vector<long> stab;
  for (long k : unit_group(level)) {
    bool fixes = true;
    for (const auto& v : lifted) {
      if (v.is_rational()) continue;
      if (!(v.galois(k) == v)) {
        fixes = false;
        break;
      }
    }
    if (fixes) stab.push_back(k);
  }
  return stab;
}

CycValue relative_trace(const CycValue& a, const std::vector<long>& small, const std::vector<long>& big) {
  const long e = a.level();
  for (long k : small) {
    if (!(a.galois(k) == a)) throw ValidationError("value not in declared subfield: " + a.to_string());
  }
  std::set<long> covered;
  CycValue sum(a.level());
  for (long k : big) {
    long r = ((k % e) + e) % e;
    if (covered.count(r)) continue;
    for (long s : small) covered.insert(((r * s) % e + e) % e);
    sum += a.galois(r);
  }
  return sum;
}

Rational trace_to_rational(const CycValue& a, const std::vector<long>& stabilizer) {
  CycValue t = relative_trace(a, stabilizer, unit_group(a.level()));
  if (!t.is_rational()) throw InvariantError("trace to Q is not rational: " + t.to_string());
  return t.rational_part();
}

}  // namespace isotypic
