#include "isotypic/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "isotypic/errors.hpp"

namespace isotypic {

namespace {

using u64 = std::uint64_t;

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 z = 2;; ++z) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](u64 f) { return powmod(z, (p - 1) / f, p) != 1; });
    if (ok) return z;
  }
}

/// Null space of a rows x cols matrix mod p (basis of column vectors).
std::vector<std::vector<u64>> nullspace(std::vector<std::vector<u64>> a, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    u64 inv = invmod(a[row][c], p);
    for (auto& x : a[row]) x = x * inv % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      u64 f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = (a[r][k] + (p - f) * a[row][k]) % p;
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<std::vector<u64>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - a[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

CharacterTable::CharacterTable(GroupPtr group, std::vector<std::vector<CycValue>> rows)
    : group_(std::move(group)), level_(static_cast<int>(group_->exponent())), rows_(std::move(rows)) {
  const FiniteGroup& g = *group_;
  const auto& classes = g.classes();
  const std::size_t r = classes.size();
  auto reject = [](const std::string& why) { throw ValidationError("invalid character table: " + why); };
  if (rows_.size() != r) {
    reject("expected " + std::to_string(r) + " characters, found " + std::to_string(rows_.size()));
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (rows_[i].size() != r) reject("row " + std::to_string(i + 1) + " has the wrong length");
    for (auto& v : rows_[i]) {
      if (level_ % v.level() != 0) reject("value level " + std::to_string(v.level()) + " does not divide the exponent");
      v = v.at_level(level_);
    }
  }
  const Rational order(static_cast<long>(g.order()));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      CycValue ip = inner_product(g, rows_[a], rows_[b]);
      CycValue expect(level_, Rational(a == b ? 1 : 0));
      if (!(ip == expect)) {
        reject("row orthogonality fails for rows " + std::to_string(a + 1) + " and " + std::to_string(b + 1));
      }
    }
  }
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t d = c; d < r; ++d) {
      CycValue sum(level_);
      for (std::size_t i = 0; i < r; ++i) sum += rows_[i][c] * rows_[i][d].conj();
      Rational expect = c == d ? order / Rational(static_cast<long>(classes[c].members.size())) : Rational(0);
      if (!(sum == CycValue(level_, expect))) {
        reject("column orthogonality fails for columns " + std::to_string(c + 1) + " and " + std::to_string(d + 1));
      }
    }
  }
  Rational total = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const CycValue& d = rows_[i][0];
    if (!d.is_rational() || !is_integer(d.rational_part()) || sgn(d.rational_part()) <= 0) {
      reject("degree of row " + std::to_string(i + 1) + " is not a positive integer");
    }
    total += d.rational_part() * d.rational_part();
  }
  if (total != order) reject("squared degrees sum to " + to_string(total));
}

long CharacterTable::degree(std::size_t chi) const { return to_long(rows_[chi][0].rational_part()); }

std::optional<std::size_t> CharacterTable::find(const std::vector<CycValue>& values) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    bool same = true;
    for (std::size_t c = 0; c < values.size() && same; ++c) same = rows_[i][c] == values[c];
    if (same) return i;
  }
  return std::nullopt;
}

CycValue inner_product(const FiniteGroup& g, const std::vector<CycValue>& a, const std::vector<CycValue>& b) {
  const auto& classes = g.classes();
  CycValue sum(a.empty() ? 1 : a[0].level());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    sum += a[c] * b[c].conj() * Rational(static_cast<long>(classes[c].members.size()));
  }
  return sum * Rational(1, static_cast<long>(g.order()));
}

long fixed_dim(const CharacterTable& table, std::size_t chi, const Subgroup& h) {
  CycValue sum(table.level());
  for (auto x : h.members) sum += table.at(chi, x);
  sum *= Rational(1, static_cast<long>(h.order()));
  if (!sum.is_rational() || !is_integer(sum.rational_part()) || sgn(sum.rational_part()) < 0) {
    throw ValidationError("invalid character/subgroup data: fixed dimension " + sum.to_string());
  }
  return to_long(sum.rational_part());
}

std::vector<std::size_t> canonical_row_order(const CharacterTable& table) {
  std::vector<std::size_t> order(table.size());
  std::iota(order.begin(), order.end(), 0);
  auto is_trivial = [&](std::size_t i) {
    return std::all_of(table.row(i).begin(), table.row(i).end(),
                        [&](const CycValue& v) { return v == CycValue(table.level(), Rational(1)); });
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (table.degree(a) != table.degree(b)) return table.degree(a) < table.degree(b);
    return std::lexicographical_compare(table.row(a).begin(), table.row(a).end(), table.row(b).begin(),
                                        table.row(b).end(), [](const CycValue& x, const CycValue& y) { return x < y; });
  });
  return order;
}

CharacterTable compute_character_table(GroupPtr group) {
  const FiniteGroup& g = *group;
  const auto& classes = g.classes();
  const std::size_t r = classes.size();
  const u64 e = g.exponent();
  const u64 n = g.order();

  u64 p = e + 1;
  while (!is_prime(p) || static_cast<double>(p) <= 2.0 * std::sqrt(static_cast<double>(n))) p += e;
  const u64 z = primitive_root(p);

  // m[j][i][k] = #{(x, y) : x in C_j, y in C_i, x y = g_k}.
  std::vector<std::vector<std::vector<u64>>> m(r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    Element gk = classes[k].representative;
    for (Element x = 0; x < n; ++x) {
      Element y = g.mul(g.inv(x), gk);
      ++m[g.class_of(x)][g.class_of(y)][k];
    }
  }
  for (auto& mat : m) {
    for (auto& row : mat) {
      for (auto& v : row) v %= p;
    }
  }

  // Common eigenvectors of all M_j (M_j w = w_j w), refined class by class.
  std::vector<std::vector<std::vector<u64>>> spaces;
  {
    std::vector<std::vector<u64>> full;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<u64> v(r, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<std::vector<std::vector<u64>>> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      const std::size_t d = basis.size();
      // M_j applied to each basis vector.
      std::vector<std::vector<u64>> image(d, std::vector<u64>(r, 0));
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t i = 0; i < r; ++i) {
          u64 s = 0;
          for (std::size_t k = 0; k < r; ++k) s = (s + m[j][i][k] * basis[c][k]) % p;
          image[c][i] = s;
        }
      }
      std::size_t covered = 0;
      for (u64 lambda = 0; lambda < p && covered < d; ++lambda) {
        std::vector<std::vector<u64>> a(r, std::vector<u64>(d));
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t c = 0; c < d; ++c) a[i][c] = (image[c][i] + (p - lambda) * basis[c][i]) % p;
        }
        auto kernel = nullspace(std::move(a), d, p);
        if (kernel.empty()) continue;
        std::vector<std::vector<u64>> piece;
        for (const auto& coeffs : kernel) {
          std::vector<u64> v(r, 0);
          for (std::size_t c = 0; c < d; ++c) {
            if (coeffs[c] == 0) continue;
            for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + coeffs[c] * basis[c][i]) % p;
          }
          piece.push_back(std::move(v));
        }
        covered += piece.size();
        next.push_back(std::move(piece));
      }
      if (covered != d) throw InvariantError("splitting failure");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw InvariantError("splitting failure");

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t k = 0; k < r; ++k) inverse_class[k] = g.class_of(g.inv(classes[k].representative));

  const int level = static_cast<int>(e);
  std::vector<std::vector<CycValue>> rows;
  for (auto& space : spaces) {
    std::vector<u64> w = space[0];
    if (w[0] == 0) throw InvariantError("splitting failure");
    u64 s = invmod(w[0], p);
    for (auto& x : w) x = x * s % p;
    u64 sum = 0;
    for (std::size_t k = 0; k < r; ++k) {
      sum = (sum + w[k] * w[inverse_class[k]] % p * invmod(classes[k].members.size() % p, p)) % p;
    }
    u64 d2 = n % p * invmod(sum, p) % p;
    u64 d = 0;
    for (u64 t = 1; t * t <= n; ++t) {
      if (t * t % p == d2) {
        d = t;
        break;
      }
    }
    if (d == 0) throw InvariantError("splitting failure");
    std::vector<u64> chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = w[k] * d % p * invmod(classes[k].members.size() % p, p) % p;

    std::vector<CycValue> row;
    for (std::size_t k = 0; k < r; ++k) {
      Element rep = classes[k].representative;
      const u64 o = g.element_order(rep);
      const u64 eo = powmod(z, (p - 1) / o, p);
      CycValue value(level);
      for (u64 l = 0; l < o; ++l) {
        u64 mu = 0;
        for (u64 t = 0; t < o; ++t) {
          u64 v = chi[g.class_of(g.power(rep, static_cast<long>(t)))];
          mu = (mu + v * powmod(eo, (o - (l * t) % o) % o, p)) % p;
        }
        mu = mu * invmod(o % p, p) % p;
        if (mu > d) throw InvariantError("splitting failure");
        if (mu) value += CycValue::root_of_unity(level, static_cast<long>(l * (e / o))) * Rational(static_cast<long>(mu));
      }
      row.push_back(std::move(value));
    }
    rows.push_back(std::move(row));
  }
  CharacterTable unsorted(group, std::move(rows));
  std::vector<std::vector<CycValue>> sorted;
  for (auto i : canonical_row_order(unsorted)) sorted.push_back(unsorted.row(i));
  return CharacterTable(std::move(group), std::move(sorted));
}

}  // namespace isotypic
