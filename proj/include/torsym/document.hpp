#pragma once

// Pair documents and inequality systems as UTF-8 JSON.
//
//   {"n": 2, "facets": ["F1", ...], "max_simplices": [["F1", "F2"], ...],
//    "lambda": {"F1": [1, 0], ...}}
//
// Integers are JSON numbers when |x| <= 2^53 - 1 and decimal strings
// otherwise; the parser accepts either form anywhere. Structural problems
// (bad JSON, missing or extra fields, wrong lengths, unknown facets) throw
// Error(Parse); mathematical validity is left to validate_pair.

#include <string>
#include <string_view>
#include <vector>

#include "torsym/charpair.hpp"

namespace torsym {

CharacteristicPair parse_pair_document(std::string_view text);

// Canonical form: two-space indentation, facets in pair order, each simplex
// listed in facet order, simplices sorted lexicographically by facet
// positions, one simplex or lambda entry per line. Ends with a newline.
std::string emit_pair_document(const CharacteristicPair& pair);

struct InequalitySystem {
  std::size_t n = 0;
  std::vector<Inequality> inequalities;
};

// {"n": 2, "inequalities": [{"normal": [1, 0], "offset": "1/2"}, ...]}
// Offsets are integers or exact fractions "p/q" given as strings.
InequalitySystem parse_inequality_document(std::string_view text);

// An integer in the document convention: a bare number or a quoted string.
std::string integer_literal(const Integer& x);

}  // namespace torsym
