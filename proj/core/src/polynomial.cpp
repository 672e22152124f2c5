#include "isotypic/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "isotypic/errors.hpp"

namespace isotypic {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const Rational& constant) {
  if (!isotypic::is_zero(constant)) c_.push_back(constant);
}

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && isotypic::is_zero(c_.back())) c_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (isotypic::is_zero(s)) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (isotypic::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

Rational QPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

QPoly QPoly::compose(const QPoly& inner) const {
  QPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + QPoly(*it);
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (isotypic::is_zero(c)) continue;
    Rational mag = abs(c);
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    bool unit = mag == 1;
    if (i == 0 || !unit) out << isotypic::to_string(mag);
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

QPolyDivision divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  long db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  Rational inv_lead = 1 / b.leading();
  for (long i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (isotypic::is_zero(q)) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (long j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).remainder; }

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly inverse_mod(const QPoly& a, const QPoly& modulus) {
  // Extended Euclid tracking only the coefficient of `a`.
  QPoly r0 = modulus, r1 = a % modulus;
  QPoly s0, s1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw ValidationError("element is not invertible modulo " + modulus.to_string());
  return (s0 * (1 / r0.leading())) % modulus;
}

namespace {

// Primitive integer polynomial with the same roots as `p`.
std::vector<Integer> primitive_integer_form(const QPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * den;
    out.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  for (auto& c : out) c /= content;
  return out;
}

Integer eval_int(const std::vector<Integer>& f, long at) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::vector<Integer> positive_divisors(const Integer& value) {
  Integer v = abs(value);
  std::vector<std::pair<Integer, int>> factors;
  for (Integer d = 2; d * d <= v; ++d) {
    int e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(d, e);
  }
  if (v > 1) factors.emplace_back(v, 1);
  std::vector<Integer> divs{1};
  for (const auto& [prime, exp] : factors) {
    std::size_t n = divs.size();
    Integer pw = 1;
    for (int e = 1; e <= exp; ++e) {
      pw *= prime;
      for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

}  // namespace

bool is_irreducible(const QPoly& p, std::size_t max_candidates) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (gcd(p, p.derivative()).degree() > 0) return false;

  const std::vector<Integer> f = primitive_integer_form(p);
  const QPoly fq = [&] {
    std::vector<Rational> c;
    for (const auto& x : f) c.emplace_back(x);
    return QPoly(std::move(c));
  }();
  const long n = p.degree();

  // Sample points with the fewest divisors keep the search small.
  struct Sample {
    long at;
    std::vector<Integer> divisors;
  };
  std::vector<Sample> samples;
  const Integer cap("1000000000000");
  for (long k = 0; k <= 60; ++k) {
    long at = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    Integer v = eval_int(f, at);
    if (v == 0) return false;  // integer root => linear factor
    if (abs(v) > cap) continue;
    samples.push_back({at, positive_divisors(v)});
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Sample& a, const Sample& b) { return a.divisors.size() < b.divisors.size(); });

  for (long d = 1; d <= n / 2; ++d) {
    const std::size_t npts = static_cast<std::size_t>(d + 1);
    if (samples.size() < npts) throw ResourceError("irreducibility check: too few usable sample points");
    std::vector<Sample> pts(samples.begin(), samples.begin() + static_cast<long>(npts));

    std::size_t total = 1;
    for (std::size_t i = 0; i < npts; ++i) {
      std::size_t choices = pts[i].divisors.size() * (i == 0 ? 1 : 2);
      if (total > max_candidates / std::max<std::size_t>(choices, 1)) {
        throw ResourceError("irreducibility check exceeds candidate budget");
      }
      total *= choices;
    }

    // Lagrange basis polynomials for the sample points.
    std::vector<QPoly> basis;
    for (std::size_t i = 0; i < npts; ++i) {
      QPoly li(Rational(1));
      for (std::size_t j = 0; j < npts; ++j) {
        if (j == i) continue;
        li = li * QPoly(std::vector<Rational>{Rational(-pts[j].at), Rational(1)});
        li *= Rational(1) / Rational(pts[i].at - pts[j].at);
      }
      basis.push_back(std::move(li));
    }

    std::vector<std::size_t> idx(npts, 0);
    for (std::size_t count = 0; count < total; ++count) {
      std::size_t rem = count;
      QPoly g;
      for (std::size_t i = 0; i < npts; ++i) {
        std::size_t choices = pts[i].divisors.size() * (i == 0 ? 1 : 2);
        std::size_t pick = rem % choices;
        rem /= choices;
        Integer value = pts[i].divisors[pick % pts[i].divisors.size()];
        if (pick >= pts[i].divisors.size()) value = -value;
        g += basis[i] * Rational(value);
      }
      if (g.degree() != d) continue;
      bool integral = std::all_of(g.coeffs().begin(), g.coeffs().end(),
                                  [](const Rational& c) { return is_integer(c); });
      if (!integral) continue;
      if ((fq % g).is_zero()) return false;
    }
  }
  return true;
}

const QPoly& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, QPoly> cache;
  if (n < 1) throw ValidationError("cyclotomic polynomial index must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  QPoly num = QPoly::monomial(1, static_cast<std::size_t>(n)) - QPoly(Rational(1));
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = divmod(num, cyclotomic_polynomial(d)).quotient;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace isotypic
