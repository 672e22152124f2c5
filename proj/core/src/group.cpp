#include "isotypic/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "isotypic/errors.hpp"
#include "isotypic/expr.hpp"

namespace isotypic {

namespace {

std::vector<std::string> default_names(std::size_t count, std::vector<std::string> names) {
  if (names.empty()) {
    for (std::size_t i = 0; i < count; ++i) names.push_back("g" + std::to_string(i + 1));
  }
  if (names.size() != count) throw ValidationError("expected " + std::to_string(count) + " generator names");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw ValidationError("empty generator name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw ValidationError("duplicate generator name '" + names[i] + "'");
    }
  }
  return names;
}

/// Run-length rendering of a generator sequence, e.g. {0,0,0,1} -> "x^3*y".
std::string render_word(const std::vector<int>& gens, const std::vector<std::string>& names) {
  if (gens.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < gens.size();) {
    std::size_t j = i;
    while (j < gens.size() && gens[j] == gens[i]) ++j;
    if (!out.empty()) out += '*';
    out += names[static_cast<std::size_t>(gens[i])];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// Labels g1^a1*g2^a2*... with 0 <= ai < ord(gi) when these products cover the
/// group; among several forms the one with the smallest last exponent (then
/// the next to last, ...) wins. Labels are read before finish_structure.
std::optional<std::vector<std::string>> collected_labels(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto& gens = g.generators();
  const std::size_t k = gens.size();
  std::vector<std::size_t> orders;
  std::size_t tuples = 1;
  for (auto x : gens) {
    std::size_t o = 1;
    for (Element y = x; y != 0; y = g.mul(y, x)) ++o;
    orders.push_back(o);
    tuples *= o;
    if (tuples > 64 * n) return std::nullopt;
  }
  std::vector<std::string> labels(n);
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  std::vector<std::size_t> exps(k, 0);
  for (std::size_t t = 0; t < tuples && covered < n; ++t) {
    // exps[k-1] varies slowest
    std::size_t r = t;
    for (std::size_t i = 0; i < k; ++i) {
      exps[i] = r % orders[i];
      r /= orders[i];
    }
    Element e = 0;
    std::string label;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < exps[i]; ++j) e = g.mul(e, gens[i]);
      if (exps[i] == 0) continue;
      if (!label.empty()) label += '*';
      label += g.generator_names()[i];
      if (exps[i] > 1) label += "^" + std::to_string(exps[i]);
    }
    if (seen[e]) continue;
    seen[e] = true;
    labels[e] = label.empty() ? "1" : label;
    ++covered;
  }
  if (covered < n) return std::nullopt;
  return labels;
}

// ---- coset enumeration -----------------------------------------------------

/// HLT coset enumeration over the trivial subgroup with coincidence handling
/// (union-find with a coincidence queue).
class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t ceiling)
      : cols_(2 * generators), ceiling_(ceiling) {
    new_coset();
  }

  std::size_t size() const { return parent_.size(); }
  bool alive(std::size_t c) const { return parent_[c] == c; }
  int entry(std::size_t c, std::size_t x) const { return table_[c * cols_ + x]; }
  std::size_t cols() const { return cols_; }

  static std::size_t inverse_col(std::size_t x) { return x ^ 1u; }

  void define(std::size_t c, std::size_t x) {
    std::size_t n = new_coset();
    set(c, x, static_cast<int>(n));
    set(n, inverse_col(x), static_cast<int>(c));
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[i]) >= 0) f = static_cast<std::size_t>(entry(f, w[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inverse_col(w[j])) >= 0) b = static_cast<std::size_t>(entry(b, inverse_col(w[j--])));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], static_cast<int>(b));
        set(b, inverse_col(w[i]), static_cast<int>(f));
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

 private:
  std::size_t new_coset() {
    if (parent_.size() >= ceiling_) throw ResourceError("group too large or infinite");
    std::size_t n = parent_.size();
    parent_.push_back(n);
    table_.resize(table_.size() + cols_, -1);
    return n;
  }

  void set(std::size_t c, std::size_t x, int v) { table_[c * cols_ + x] = v; }

  void merge(std::size_t k, std::size_t l, std::deque<std::size_t>& queue) {
    std::size_t a = rep(k), b = rep(l);
    if (a == b) return;
    std::size_t lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        int fe = entry(e, x);
        if (fe < 0) continue;
        std::size_t f = static_cast<std::size_t>(fe);
        std::size_t xi = inverse_col(x);
        if (entry(f, xi) == static_cast<int>(e)) set(f, xi, -1);
        std::size_t e1 = rep(e), f1 = rep(f);
        if (entry(e1, x) >= 0) {
          merge(f1, static_cast<std::size_t>(entry(e1, x)), queue);
        } else if (entry(f1, xi) >= 0) {
          merge(e1, static_cast<std::size_t>(entry(f1, xi)), queue);
        } else {
          set(e1, x, static_cast<int>(f1));
          set(f1, xi, static_cast<int>(e1));
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t ceiling_;
  std::vector<std::size_t> parent_;
  std::vector<int> table_;
};

}  // namespace

// ---- builders ----------------------------------------------------------------

GroupPtr FiniteGroup::from_generator_action(const std::vector<std::vector<std::uint32_t>>& right_action,
                                            std::vector<std::string> generator_names, const Bounds& bounds) {
  const std::size_t n = right_action.size();
  if (n == 0) throw ValidationError("group action with no elements");
  const std::size_t k = generator_names.size();
  if (n > bounds.max_group_order) throw ResourceError("group too large or infinite");
  for (const auto& row : right_action) {
    if (row.size() != k) throw ValidationError("generator action row has the wrong width");
    for (auto v : row) {
      if (v >= n) throw ValidationError("generator action refers to an unknown element");
    }
  }

  // BFS renumbering from the identity; generators in input order.
  std::vector<std::uint32_t> new_of(n, UINT32_MAX), old_of;
  std::vector<std::uint32_t> parent, via;
  new_of[0] = 0;
  old_of.push_back(0);
  parent.push_back(0);
  via.push_back(UINT32_MAX);
  for (std::size_t head = 0; head < old_of.size(); ++head) {
    for (std::size_t g = 0; g < k; ++g) {
      std::uint32_t target = right_action[old_of[head]][g];
      if (new_of[target] != UINT32_MAX) continue;
      new_of[target] = static_cast<std::uint32_t>(old_of.size());
      old_of.push_back(target);
      parent.push_back(static_cast<std::uint32_t>(head));
      via.push_back(static_cast<std::uint32_t>(g));
    }
  }
  if (old_of.size() != n) throw ValidationError("generators do not generate the whole group");

  auto act = [&](std::uint32_t a, std::size_t g) { return new_of[right_action[old_of[a]][g]]; };

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->order_ = n;
  group->mul_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) group->mul_[a * n] = static_cast<Element>(a);
  for (std::size_t b = 1; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      group->mul_[a * n + b] = act(group->mul_[a * n + parent[b]], via[b]);
    }
  }
  for (std::size_t g = 0; g < k; ++g) group->generators_.push_back(act(0, g));
  group->generator_names_ = std::move(generator_names);

  group->labels_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<int> word;
    for (std::size_t c = a; c != 0; c = parent[c]) word.push_back(static_cast<int>(via[c]));
    std::reverse(word.begin(), word.end());
    group->labels_[a] = render_word(word, group->generator_names_);
  }
  if (auto collected = collected_labels(*group)) group->labels_ = std::move(*collected);
  group->finish_structure();
  return group;
}

GroupPtr FiniteGroup::from_presentation(std::size_t generators, const std::vector<Word>& relators,
                                        std::vector<std::string> generator_names, const Bounds& bounds) {
  generator_names = default_names(generators, std::move(generator_names));
  if (generators == 0) return from_generator_action({{}}, {}, bounds);

  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : relators) {
    std::vector<std::size_t> cols;
    for (int letter : r) {
      if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > generators) {
        throw ValidationError("relator letter " + std::to_string(letter) + " out of range");
      }
      std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
      cols.push_back(2 * g + (letter < 0 ? 1 : 0));
    }
    if (!cols.empty()) rels.push_back(std::move(cols));
  }
  if (rels.empty()) throw ResourceError("group too large or infinite");

  CosetTable table(generators, bounds.coset_ceiling_factor * bounds.max_group_order);
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (!table.alive(c)) continue;
    for (const auto& r : rels) {
      table.scan_and_fill(c, r);
      if (!table.alive(c)) break;
    }
    if (!table.alive(c)) continue;
    for (std::size_t x = 0; x < table.cols(); ++x) {
      if (!table.alive(c)) break;
      if (table.entry(c, x) < 0) table.define(c, x);
    }
  }

  std::vector<std::uint32_t> index(table.size(), UINT32_MAX);
  std::vector<std::size_t> live;
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (table.alive(c)) {
      index[c] = static_cast<std::uint32_t>(live.size());
      live.push_back(c);
    }
  }
  if (live.size() > bounds.max_group_order) throw ResourceError("group too large or infinite");
  std::vector<std::vector<std::uint32_t>> action(live.size(), std::vector<std::uint32_t>(generators));
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t g = 0; g < generators; ++g) {
      int e = table.entry(live[i], 2 * g);
      if (e < 0) throw InvariantError("coset enumeration left an incomplete table");
      action[i][g] = index[table.rep(static_cast<std::size_t>(e))];
    }
  }
  return from_generator_action(action, std::move(generator_names), bounds);
}

GroupPtr FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& perms,
                                        std::vector<std::string> generator_names, const Bounds& bounds) {
  generator_names = default_names(perms.size(), std::move(generator_names));
  const std::size_t points = perms.empty() ? 0 : perms[0].size();
  for (const auto& p : perms) {
    if (p.size() != points) throw ValidationError("permutations act on different point counts");
    std::vector<bool> seen(points, false);
    for (auto v : p) {
      if (v >= points || seen[v]) throw ValidationError("input is not a permutation");
      seen[v] = true;
    }
  }
  std::vector<std::uint32_t> identity(points);
  std::iota(identity.begin(), identity.end(), 0u);
  std::map<std::vector<std::uint32_t>, std::uint32_t> index{{identity, 0}};
  std::vector<std::vector<std::uint32_t>> elements{identity};
  std::vector<std::vector<std::uint32_t>> action;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    action.emplace_back(perms.size());
    for (std::size_t g = 0; g < perms.size(); ++g) {
      std::vector<std::uint32_t> next(points);
      for (std::size_t i = 0; i < points; ++i) next[i] = perms[g][elements[head][i]];
      auto [it, inserted] = index.emplace(next, static_cast<std::uint32_t>(elements.size()));
      if (inserted) {
        if (elements.size() >= bounds.max_group_order) throw ResourceError("permutation closure exceeds bound");
        elements.push_back(std::move(next));
      }
      action[head][g] = it->second;
    }
  }
  return from_generator_action(action, std::move(generator_names), bounds);
}

GroupPtr FiniteGroup::from_cayley_table(const std::vector<std::vector<Element>>& table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  auto fail = [](const std::string& why) -> void { throw ValidationError("not a group table: " + why); };
  if (n == 0) fail("empty table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) fail("row " + std::to_string(a) + " has length " + std::to_string(table[a].size()));
    for (auto v : table[a]) {
      if (v >= n) fail("entry " + std::to_string(v) + " out of range in row " + std::to_string(a));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a) fail("element 0 is not the identity (witness " + std::to_string(a) + ")");
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[table[a][b]]) fail("row " + std::to_string(a) + " repeats " + std::to_string(table[a][b]));
      if (col[table[b][a]]) fail("column " + std::to_string(a) + " repeats " + std::to_string(table[b][a]));
      row[table[a][b]] = col[table[b][a]] = true;
    }
  }

  // Greedy generating set, then Light's associativity test against it.
  std::vector<Element> gens;
  std::vector<bool> in_span(n, false);
  in_span[0] = true;
  std::vector<Element> span{0};
  for (Element cand = 1; cand < n; ++cand) {
    if (in_span[cand]) continue;
    gens.push_back(cand);
    span.assign(1, 0);
    std::fill(in_span.begin(), in_span.end(), false);
    in_span[0] = true;
    for (std::size_t head = 0; head < span.size(); ++head) {
      for (auto g : gens) {
        Element next = table[span[head]][g];
        if (!in_span[next]) {
          in_span[next] = true;
          span.push_back(next);
        }
      }
    }
  }
  for (auto g : gens) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table[table[a][g]][b] != table[a][table[g][b]]) {
          fail("associativity fails for (" + std::to_string(a) + ", " + std::to_string(g) + ", " + std::to_string(b) + ")");
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    Element b = 0;
    while (table[a][b] != 0) ++b;
    if (table[b][a] != 0) fail("element " + std::to_string(a) + " has no two-sided inverse");
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->order_ = n;
  group->mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) std::copy(table[a].begin(), table[a].end(), group->mul_.begin() + a * n);
  group->generators_ = gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    group->generator_names_.push_back(labels.empty() ? "g" + std::to_string(i + 1) : labels[gens[i]]);
  }
  if (labels.empty()) {
    // Shortlex words over the greedy generators.
    std::vector<std::vector<int>> words(n);
    std::vector<bool> seen(n, false);
    std::vector<Element> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Element next = table[queue[head]][gens[g]];
        if (seen[next]) continue;
        seen[next] = true;
        words[next] = words[queue[head]];
        words[next].push_back(static_cast<int>(g));
        queue.push_back(next);
      }
    }
    for (std::size_t a = 0; a < n; ++a) labels.push_back(render_word(words[a], group->generator_names_));
  } else if (labels.size() != n) {
    throw ValidationError("label count does not match the table");
  }
  group->labels_ = std::move(labels);
  group->finish_structure();
  return group;
}

// ---- derived structure -----------------------------------------------------------

void FiniteGroup::finish_structure() {
  const std::size_t n = order_;
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul(static_cast<Element>(a), static_cast<Element>(b)) == 0) {
        inv_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  orders_.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    std::uint32_t k = 1;
    Element p = static_cast<Element>(a);
    while (p != 0) {
      p = mul(p, static_cast<Element>(a));
      ++k;
    }
    orders_[a] = k;
  }
  exponent_ = 1;
  for (auto o : orders_) exponent_ = std::lcm(exponent_, o);

  std::vector<std::size_t> raw_class(n, SIZE_MAX);
  std::vector<ConjugacyClass> raw;
  for (std::size_t a = 0; a < n; ++a) {
    if (raw_class[a] != SIZE_MAX) continue;
    ConjugacyClass cls;
    cls.representative = static_cast<Element>(a);
    cls.members.push_back(static_cast<Element>(a));
    raw_class[a] = raw.size();
    for (std::size_t head = 0; head < cls.members.size(); ++head) {
      for (auto g : generators_) {
        Element c = conjugate(cls.members[head], g);
        if (raw_class[c] == SIZE_MAX) {
          raw_class[c] = raw.size();
          cls.members.push_back(c);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    raw.push_back(std::move(cls));
  }
  std::stable_sort(raw.begin(), raw.end(), [&](const ConjugacyClass& x, const ConjugacyClass& y) {
    return orders_[x.representative] < orders_[y.representative];
  });
  classes_ = std::move(raw);
  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (auto m : classes_[c].members) class_of_[m] = c;
  }
}

Element FiniteGroup::power(Element a, long k) const {
  long o = static_cast<long>(orders_[a]);
  k %= o;
  if (k < 0) k += o;
  Element result = 0, base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (auto g : generators_) {
    for (auto h : generators_) {
      if (mul(g, h) != mul(h, g)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::cayley_table() const {
  std::vector<std::vector<Element>> t(order_);
  for (std::size_t a = 0; a < order_; ++a) t[a].assign(mul_.begin() + a * order_, mul_.begin() + (a + 1) * order_);
  return t;
}

Element FiniteGroup::evaluate(const Word& w) const {
  Element result = 0;
  for (int letter : w) {
    if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > generators_.size()) {
      throw ValidationError("word letter " + std::to_string(letter) + " out of range");
    }
    Element g = generators_[static_cast<std::size_t>(std::abs(letter)) - 1];
    result = mul(result, letter > 0 ? g : inv(g));
  }
  return result;
}

Element FiniteGroup::parse_element(const std::string& text) const {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  std::string trimmed = first == std::string::npos ? std::string() : text.substr(first, last - first + 1);
  auto it = std::find(labels_.begin(), labels_.end(), trimmed);
  if (it != labels_.end()) return static_cast<Element>(it - labels_.begin());
  return evaluate(parse_word(trimmed, generator_names_));
}

std::vector<std::vector<std::size_t>> rational_fusion_classes(const FiniteGroup& g) {
  const auto& classes = g.classes();
  std::vector<bool> used(classes.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (used[c]) continue;
    Element r = classes[c].representative;
    long o = g.element_order(r);
    std::vector<std::size_t> fused;
    for (long k = 1; k <= o; ++k) {
      if (std::gcd(k, o) != 1) continue;
      std::size_t d = g.class_of(g.power(r, k));
      if (!used[d]) {
        used[d] = true;
        fused.push_back(d);
      }
    }
    std::sort(fused.begin(), fused.end());
    out.push_back(std::move(fused));
  }
  return out;
}

namespace {

struct WordEnv {
  const std::vector<std::string>& names;

  static Word inverse(Word w) {
    std::reverse(w.begin(), w.end());
    for (auto& l : w) l = -l;
    return w;
  }
  Word number(const Rational& q) const {
    if (q != 1) throw ValidationError("only 1 may appear as a number in a group word");
    return {};
  }
  Word symbol(const std::string& name) const {
    if (name == "identity" || name == "id") return {};
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return {static_cast<int>(it - names.begin()) + 1};
    auto parts = split_identifier(name, names);
    if (parts.empty()) throw ValidationError("unknown generator '" + name + "'");
    Word w;
    for (const auto& p : parts) w.push_back(static_cast<int>(std::find(names.begin(), names.end(), p) - names.begin()) + 1);
    return w;
  }
  Word call(const std::string& name, Word arg) const { return mul(symbol(name), std::move(arg)); }
  Word add(const Word&, const Word&) const { throw ValidationError("'+' is not allowed in a group word"); }
  Word sub(const Word&, const Word&) const { throw ValidationError("'-' is not allowed in a group word"); }
  Word neg(const Word&) const { throw ValidationError("'-' is not allowed in a group word"); }
  Word mul(Word a, const Word& b) const {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  Word div(Word a, const Word& b) const { return mul(std::move(a), inverse(b)); }
  Word pow(const Word& a, long k) const {
    Word base = k < 0 ? inverse(a) : a;
    Word out;
    for (long i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& generator_names) {
  WordEnv env{generator_names};
  return evaluate_expr<Word>(parse_expression(text), env);
}

}  // namespace isotypic
