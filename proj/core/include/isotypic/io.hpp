#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isotypic/analysis.hpp"
#include "isotypic/idempotents.hpp"
#include "isotypic/matrix_rep.hpp"

namespace isotypic {

using json = nlohmann::ordered_json;

/// Reads and parses a JSON file; ValidationError on I/O or syntax errors.
json read_json_file(const std::filesystem::path& path);

/// Subgroup generated by the given words; "G" stands for all generators, "1" for the identity.
Subgroup subgroup_from_words(const FiniteGroup& g, const std::vector<std::string>& words);

struct GroupSource {
  std::string name;
  GroupPtr group;
  std::vector<SchurDeclaration> schur;
};

/// Group file: generator names plus exactly one of "presentation",
/// "permutations", "cayley"; optional "schur" declarations.
GroupSource load_group(const json& j, const Bounds& bounds = {});
GroupSource load_group_file(const std::filesystem::path& path, const Bounds& bounds = {});
json group_to_json(const FiniteGroup& g);

/// Polynomial in one variable with rational coefficients, e.g. "t^4 - 16t^2 + 144".
QPoly parse_polynomial(const std::string& text, const std::string& var = "t");

/// "Q" or {"minpoly", "automorphisms": [{"name","image"}], "fixers", "names"}.
NumFieldPtr load_field(const json& j);
json field_to_json(const NumFieldPtr& field);

/// Scalar from a string expression (w<n>, declared names) or {"level","coeffs"}.
CycValue load_cyc_value(const json& j, int level, const std::map<std::string, std::string>& names = {});
json cyc_value_to_json(const CycValue& v);

/// {"classes": [labels], "characters": [[values]], "names": {...}}; rows keep file order.
CharacterTable load_character_table(const json& j, const GroupPtr& group);
json character_table_to_json(const CharacterTable& table);

struct RepSource {
  MatrixRep rep;
  ValueEmbedding embedding;
  std::size_t character = 0;  ///< linked row, 0-based
};

/// {"field", "generators": {name: matrix}, "embedding": [{"value","image"}], "character": "auto"|n}.
RepSource load_rep(const json& j, const CharacterTable& table);

/// {"field": ..., "coeffs": [[index, scalar], ...]}.
json algebra_element_to_json(const QElement& a);
json algebra_element_to_json(const CycElement& a);
json algebra_element_to_json(const LElement& a);
/// Loads an element into L; "coeffs" or "expr" form. Q and cyclotomic inputs
/// are mapped through the embedding when one is given.
LElement load_algebra_element(const json& j, const GroupPtr& group, const NumFieldPtr& field,
                              const ValueEmbedding* embedding = nullptr);

/// Runs every check of a fixture manifest; paths inside are relative to it.
Transcript verify_manifest(const std::filesystem::path& path, const Bounds& bounds = {});

}  // namespace isotypic
