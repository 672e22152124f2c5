#pragma once

#include <string>

#include "isotypic/decomposition.hpp"
#include "isotypic/idempotents.hpp"
#include "isotypic/io.hpp"

namespace isotypic {

enum class Format { text, json };

/// "S<i>" with i the 1-based lattice index.
std::string subgroup_id(std::size_t s);
/// "<x^2, x*y>" from the stored generators.
std::string subgroup_generators(const GroupAnalysis& a, std::size_t s);
json subgroups_json(const GroupAnalysis& a);

/// Value in the basis of products of the field's named elements when those
/// span L (e.g. "2*k - k*l"), else as a polynomial in t.
std::string render_named(const NumFieldValue& v);
std::string render_element(const LElement& a);

std::string render_group_info(const GroupAnalysis& a, const std::string& name, Format f);
std::string render_character_table(const CharacterTable& t, const std::vector<RationalIrrep>& irreps, Format f);
std::string render_decomposition(const GroupAnalysis& a, const DecompositionReport& r, Format f);
json verdict_json(const GroupAnalysis& a, const Verdict& v);
std::string render_verdict(const GroupAnalysis& a, const Verdict& v, Format f);
std::string render_full_report(const GroupAnalysis& a, const FullReport& r, Format f);
std::string render_transcript(const Transcript& t, Format f);
json transcript_json(const Transcript& t);

}  // namespace isotypic
