#include "isotypic/rational_irreps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "isotypic/errors.hpp"

namespace isotypic {

std::string SchurStatus::describe() const {
  std::string out;
  switch (kind) {
    case Kind::exact:
      out = "Exact(" + std::to_string(m) + ")";
      break;
    case Kind::asserted:
      out = "Asserted(" + std::to_string(m) + ")";
      break;
    case Kind::bounded:
      out = "Bounded(1, " + std::to_string(divisor_bound) + ")";
      break;
  }
  if (!evidence.empty()) out += " [" + evidence + "]";
  return out;
}

std::string RationalIrrep::label() const {
  std::string inner;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (i) inner += "+";
    inner += "V" + std::to_string(orbit[i] + 1);
  }
  if (schur.m > 1) return std::to_string(schur.m) + "(" + inner + ")";
  return orbit.size() > 1 ? "(" + inner + ")" : inner;
}

std::vector<RationalIrrep> galois_orbits(const CharacterTable& table) {
  const int e = table.level();
  const auto units = unit_group(e);
  std::vector<bool> used(table.size(), false);
  std::vector<RationalIrrep> out;
  for (std::size_t chi = 0; chi < table.size(); ++chi) {
    if (used[chi]) continue;
    RationalIrrep w;
    for (long k : units) {
      std::vector<CycValue> image;
      for (const auto& v : table.row(chi)) image.push_back(v.galois(k));
      auto idx = table.find(image);
      if (!idx) throw ValidationError("Galois conjugate of character " + std::to_string(chi + 1) + " is not in the table");
      if (!used[*idx]) {
        used[*idx] = true;
        w.orbit.push_back(*idx);
      }
    }
    std::sort(w.orbit.begin(), w.orbit.end());
    w.stabilizer = char_field_stabilizer(table.row(chi), e);
    w.degree = table.degree(chi);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Rational> rational_character(const CharacterTable& table, const RationalIrrep& w) {
  std::vector<Rational> out;
  const auto& row = table.row(w.orbit.front());
  for (const auto& v : row) out.push_back(trace_to_rational(v, w.stabilizer) * w.schur.m);
  return out;
}

long schur_divisor_bound(const CharacterTable& table, const RationalIrrep& w, const SubgroupLattice& lattice) {
  long g = 0;
  for (const auto& h : lattice.classes()) g = std::gcd(g, fixed_dim(table, w.orbit.front(), h));
  return g;
}

bool IrrepSelector::matches(const RationalIrrep& w) const {
  if (degree && *degree != w.degree) return false;
  if (field_degree && *field_degree != static_cast<long>(w.field_degree())) return false;
  for (auto m : members) {
    if (m == 0 || std::find(w.orbit.begin(), w.orbit.end(), m - 1) == w.orbit.end()) return false;
  }
  return true;
}

std::string IrrepSelector::describe() const {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "-" : "") + std::to_string(members[i]);
  if (degree) out += (out.empty() ? "" : ":") + std::string("deg") + std::to_string(*degree);
  if (field_degree) out += (out.empty() ? "" : ":") + std::string("K") + std::to_string(*field_degree);
  return out;
}

IrrepSelector parse_irrep_selector(const std::string& text) {
  IrrepSelector sel;
  std::stringstream parts(text);
  std::string part;
  auto number = [&](const std::string& s) -> long {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ValidationError("bad irreducible selector '" + text + "'");
    }
    return std::stol(s);
  };
  while (std::getline(parts, part, ':')) {
    if (part.rfind("deg", 0) == 0) {
      sel.degree = number(part.substr(3));
    } else if (part.rfind("K", 0) == 0) {
      sel.field_degree = number(part.substr(1));
    } else {
      std::stringstream ids(part);
      std::string id;
      while (std::getline(ids, id, '-')) sel.members.push_back(static_cast<std::size_t>(number(id)));
    }
  }
  if (!sel.degree && !sel.field_degree && sel.members.empty()) throw ValidationError("empty irreducible selector");
  return sel;
}

}  // namespace isotypic
