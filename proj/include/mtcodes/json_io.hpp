#pragma once

#include <string>

#include "mtcodes/constructions.hpp"
#include "mtcodes/search.hpp"

namespace mtcodes {

// JSON wire formats. Polynomials are ascending coefficient arrays; negative
// entries are accepted on input and reduced to canonical residues.
//
// Code specs come in three shapes:
//   {"q":7, "matrix":[[...],...]}                          raw generator matrix
//   {"q":3, "n":20, "a":2, "gen":[2,2,0,0,1,1,1]}          constacyclic
//   {"q":3, "kind":"full"|{"subcode":12}, "blocks":[{"m":13,"a":1,"gen":[2,1]},...]}
//                                                          multi-twisted

/// Parses any code-spec shape down to its generator matrix.
GenMatrix parse_code_spec_json(const std::string& text, std::string* description = nullptr);

/// The multi-twisted spec for a realized code (parseable by the reader above).
std::string mt_code_to_json(const MTCode& code);

/// Construction template with every field present (multipliers included).
ConstructionSpec parse_construction_json(const std::string& text);

/// Construction template for search: multiplier fields must be absent (they
/// are sampled); placeholder 1-polynomials are installed in the returned spec.
ConstructionSpec parse_construction_template_json(const std::string& text);

/// {"code": <mt spec>, "report": {...}} written by the construct command.
std::string construction_output_json(const ConstructionReport& report);

SearchConfig parse_search_config_json(const std::string& text);

}  // namespace mtcodes
