#pragma once

// Text emitters for tables, class vectors and scalar maps.

#include "spinhecke/characters.hpp"
#include "spinhecke/symfunc.hpp"
#include "spinhecke/traces.hpp"

#include <map>
#include <string>
#include <string_view>

namespace spinhecke {

enum class Format { Json, Csv, Latex };

/// Throws std::invalid_argument for unknown names.
Format parse_format(std::string_view name);

/// {"3": "...", "1,1,1": "..."} in reverse-lexicographic key order.
std::string to_json(const std::map<Partition, Scalar> &values);
std::string to_json(const ClassVector &f);
/// Monomial view {"2": "...", "1,1": "..."}.
std::string to_json(const SymPoly &p);

std::string emit_table(const CharacterTable &t, Format format);

/// Scalar string for a LaTeX math environment: v^{12}, no '*'.
std::string latex_scalar(const Scalar &s);

}  // namespace spinhecke
