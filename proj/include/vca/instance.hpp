#pragma once

#include <iosfwd>
#include <string>

#include "vca/core.hpp"

namespace vca {

/// Reads the `.vca` instance format:
///
///     # Example: two maximal facets, canonical weights
///     0 inf : 1
///     2 0   : 1
///
/// One maximal facet per line: n entries (nonnegative integers or `inf`, any
/// case), a colon, and a positive integer weight. `#` starts a comment and
/// blank lines are skipped.
///
/// Throws SyntaxError (bad token, missing colon), DimensionError (ragged rows),
/// WeightError (weight 0), AntichainError (duplicate or dominated row), or
/// EmptyComplexError (no rows).
WeightedMulticomplex parse_instance(std::istream& in);
WeightedMulticomplex parse_instance(const std::string& text);

/// Inverse of parse_instance, one row per maximal facet in lexicographic order.
std::string format_instance(const WeightedMulticomplex& w);

}  // namespace vca
