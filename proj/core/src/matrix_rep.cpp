#include "isotypic/matrix_rep.hpp"

#include "isotypic/errors.hpp"
#include "isotypic/linalg.hpp"

namespace isotypic {

ValueEmbedding::ValueEmbedding(NumFieldPtr field, int level, std::vector<std::pair<CycValue, NumFieldValue>> generators)
    : field_(std::move(field)), level_(level) {
  for (auto& [v, img] : generators) {
    if (level_ % v.level() != 0) throw ValidationError("embedded value " + v.to_string() + " is not at a level dividing " + std::to_string(level_));
    v = v.at_level(level_);
    if (img.field() != field_) throw ValidationError("embedding image lies in a different field");
  }
  // Grow a Q-basis of the generated ring from 1 by multiplying with generators,
  // checking every dependent product against the claimed images.
  std::vector<CycValue> values{CycValue(level_, Rational(1))};
  basis_.push_back(values[0].coeffs());
  images_.push_back(NumFieldValue(field_, Rational(1)));
  for (std::size_t head = 0; head < values.size(); ++head) {
    for (const auto& [v, img] : generators) {
      CycValue prod = values[head] * v;
      NumFieldValue prod_img = images_[head] * img;
      auto coords = coordinates(prod);
      if (!coords) {
        values.push_back(prod);
        basis_.push_back(prod.coeffs());
        images_.push_back(prod_img);
        continue;
      }
      NumFieldValue expect(field_);
      for (std::size_t i = 0; i < coords->size(); ++i) expect += images_[i] * (*coords)[i];
      if (!(expect == prod_img)) {
        throw ValidationError("declared embedding is not a field homomorphism (product " + prod.to_string() + ")");
      }
    }
  }
}

std::optional<std::vector<Rational>> ValueEmbedding::coordinates(const CycValue& v) const {
  return solve_combination(basis_, v.at_level(level_).coeffs());
}

std::optional<NumFieldValue> ValueEmbedding::map(const CycValue& v) const {
  if (level_ % v.level() != 0) return std::nullopt;
  auto coords = coordinates(v);
  if (!coords) return std::nullopt;
  NumFieldValue out(field_);
  for (std::size_t i = 0; i < coords->size(); ++i) {
    if (!is_zero((*coords)[i])) out += images_[i] * (*coords)[i];
  }
  return out;
}

NumFieldValue ValueEmbedding::map_or_throw(const CycValue& v) const {
  auto r = map(v);
  if (!r) throw ValidationError("value " + v.to_string() + " lies outside the declared embedding");
  return *r;
}

MatrixRep::Matrix matmul(const MatrixRep::Matrix& a, const MatrixRep::Matrix& b) {
  const std::size_t n = a.size();
  MatrixRep::Matrix c(n, std::vector<NumFieldValue>(n, zero_like(a[0][0])));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

MatrixRep::MatrixRep(GroupPtr group, NumFieldPtr field, std::vector<Matrix> generator_images)
    : group_(std::move(group)), field_(std::move(field)) {
  const FiniteGroup& g = *group_;
  if (generator_images.size() != g.generators().size()) {
    throw ValidationError("expected " + std::to_string(g.generators().size()) + " generator matrices");
  }
  n_ = generator_images.empty() ? 1 : generator_images[0].size();
  for (const auto& m : generator_images) {
    if (m.size() != n_) throw ValidationError("generator matrices have different sizes");
    for (const auto& row : m) {
      if (row.size() != n_) throw ValidationError("generator matrix is not square");
      for (const auto& x : row) {
        if (x.field() != field_) throw ValidationError("matrix entry lies in a different field");
      }
    }
  }
  Matrix identity(n_, std::vector<NumFieldValue>(n_, NumFieldValue(field_)));
  for (std::size_t i = 0; i < n_; ++i) identity[i][i] = NumFieldValue(field_, Rational(1));

  images_.assign(g.order(), Matrix{});
  std::vector<bool> done(g.order(), false);
  images_[0] = identity;
  done[0] = true;
  std::vector<Element> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t k = 0; k < generator_images.size(); ++k) {
      Element next = g.mul(queue[head], g.generators()[k]);
      if (done[next]) continue;
      images_[next] = matmul(images_[queue[head]], generator_images[k]);
      done[next] = true;
      queue.push_back(next);
    }
  }
  for (Element a = 0; a < g.order(); ++a) {
    for (std::size_t k = 0; k < generator_images.size(); ++k) {
      Element b = g.mul(a, g.generators()[k]);
      if (matmul(images_[a], generator_images[k]) != images_[b]) {
        throw ValidationError("matrices do not define a representation: rho(" + g.label(a) + ")*rho(" +
                              g.generator_names()[k] + ") != rho(" + g.label(b) + ")");
      }
    }
  }
}

NumFieldValue MatrixRep::trace(Element g) const {
  NumFieldValue t(field_);
  for (std::size_t i = 0; i < n_; ++i) t += images_[g][i][i];
  return t;
}

std::size_t MatrixRep::link_character(const CharacterTable& table, const ValueEmbedding& embedding,
                                      std::optional<std::size_t> chi) const {
  const auto& classes = group_->classes();
  auto matches = [&](std::size_t row) {
    if (table.degree(row) != static_cast<long>(n_)) return false;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      auto img = embedding.map(table.value(row, c));
      if (!img || !(*img == trace(classes[c].representative))) return false;
    }
    return true;
  };
  if (chi) {
    if (*chi >= table.size() || !matches(*chi)) throw InvariantError("representation inconsistent with character");
    return *chi;
  }
  std::optional<std::size_t> hit;
  for (std::size_t row = 0; row < table.size(); ++row) {
    if (!matches(row)) continue;
    if (hit) throw ValidationError("representation matches more than one character");
    hit = row;
  }
  if (!hit) throw InvariantError("representation inconsistent with character");
  return *hit;
}

}  // namespace isotypic
