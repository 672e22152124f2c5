#include "isotypic/subgroups.hpp"

#include <algorithm>
#include <numeric>

#include "isotypic/errors.hpp"

namespace isotypic {

bool Subgroup::contains(Element a) const { return std::binary_search(members.begin(), members.end(), a); }

namespace {

bool is_prime_power(std::uint32_t n) {
  if (n < 2) return false;
  std::uint32_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<Element> greedy_generators(const FiniteGroup& g, const std::vector<Element>& members) {
  std::vector<Element> gens;
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<Element> span{0};
  for (auto cand : members) {
    if (in[cand]) continue;
    gens.push_back(cand);
    // Extend the closure by the new generator (closure is a subgroup: finite).
    for (std::size_t head = 0; head < span.size(); ++head) {
      for (auto gen : gens) {
        Element next = g.mul(span[head], gen);
        if (!in[next]) {
          in[next] = true;
          span.push_back(next);
        }
      }
    }
    if (span.size() == members.size()) break;
  }
  return gens;
}

}  // namespace

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& elems) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> span{0};
  in[0] = true;
  for (auto e : elems) {
    if (e >= g.order()) throw ValidationError("element index " + std::to_string(e) + " out of range");
  }
  for (std::size_t head = 0; head < span.size(); ++head) {
    for (auto gen : elems) {
      Element next = g.mul(span[head], gen);
      if (!in[next]) {
        in[next] = true;
        span.push_back(next);
      }
    }
  }
  std::sort(span.begin(), span.end());
  Subgroup h;
  h.generators = greedy_generators(g, span);
  h.members = std::move(span);
  return h;
}

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return subgroup_generated(g, gens);
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element c) {
  Subgroup out;
  out.members.reserve(h.members.size());
  for (auto m : h.members) out.members.push_back(g.conjugate(m, c));
  std::sort(out.members.begin(), out.members.end());
  out.generators = greedy_generators(g, out.members);
  return out;
}

std::optional<Element> conjugate_into(const FiniteGroup& g, const Subgroup& h, const Subgroup& n) {
  if (n.order() % h.order() != 0) return std::nullopt;
  for (Element c = 0; c < g.order(); ++c) {
    bool inside = std::all_of(h.generators.begin(), h.generators.end(),
                              [&](Element x) { return n.contains(g.conjugate(x, c)); });
    if (inside) return c;
  }
  return std::nullopt;
}

std::size_t SubgroupLattice::KeyHash::operator()(const std::vector<std::uint64_t>& k) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : k) h = (h ^ w) * 0x100000001b3ull + (h >> 17);
  return h;
}

std::vector<std::uint64_t> SubgroupLattice::key(const std::vector<Element>& members) const {
  std::vector<std::uint64_t> k((group_->order() + 63) / 64, 0);
  for (auto m : members) k[m / 64] |= std::uint64_t{1} << (m % 64);
  return k;
}

SubgroupLattice::SubgroupLattice(GroupPtr group, const Bounds& bounds) : group_(std::move(group)) {
  const FiniteGroup& g = *group_;
  if (g.order() > bounds.max_lattice_order) {
    throw ResourceError("group order " + std::to_string(g.order()) + " exceeds the subgroup lattice bound " +
                        std::to_string(bounds.max_lattice_order));
  }
  std::vector<Element> extenders;
  for (Element a = 1; a < g.order(); ++a) {
    if (is_prime_power(g.element_order(a))) extenders.push_back(a);
  }

  std::vector<Subgroup> found;
  std::vector<std::size_t> lengths;
  auto register_class = [&](Subgroup h) {
    std::vector<std::vector<Element>> conjugates;
    for (Element c = 0; c < g.order(); ++c) {
      std::vector<Element> m;
      m.reserve(h.members.size());
      for (auto x : h.members) m.push_back(g.conjugate(x, c));
      std::sort(m.begin(), m.end());
      conjugates.push_back(std::move(m));
    }
    std::sort(conjugates.begin(), conjugates.end());
    conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
    for (const auto& m : conjugates) index_.emplace(key(m), found.size());
    Subgroup canon;
    canon.members = conjugates.front();
    canon.generators = greedy_generators(g, canon.members);
    canon.canonical = true;
    found.push_back(std::move(canon));
    lengths.push_back(conjugates.size());
  };

  register_class(subgroup_generated(g, {}));
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto a : extenders) {
      if (found[i].contains(a)) continue;
      std::vector<Element> gens = found[i].generators;
      gens.push_back(a);
      Subgroup k = subgroup_generated(g, gens);
      if (index_.count(key(k.members))) continue;
      register_class(std::move(k));
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].order() != found[b].order()) return found[a].order() < found[b].order();
    return found[a].members < found[b].members;
  });
  std::vector<std::size_t> new_index(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_index[perm[i]] = i;
    classes_.push_back(found[perm[i]]);
    lengths_.push_back(lengths[perm[i]]);
  }
  for (auto& [k, v] : index_) v = new_index[v];

  containment_.assign(classes_.size(), std::vector<std::optional<Element>>(classes_.size()));
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (std::size_t j = 0; j < classes_.size(); ++j) {
      containment_[i][j] = conjugate_into(g, classes_[i], classes_[j]);
    }
  }
}

std::size_t SubgroupLattice::class_of(const Subgroup& h) const {
  auto it = index_.find(key(h.members));
  if (it == index_.end()) throw ValidationError("not a subgroup of the group");
  return it->second;
}

}  // namespace isotypic
