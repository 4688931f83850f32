#pragma once

#include <string_view>

#include "uff/constructors.hpp"

namespace uff {

/// Reads {"n":int, "levels":[{"m":int, "h":int, "cushion":[[ints]]}]}.
/// Subsets are ascending integer arrays, [] for the empty set.  Throws
/// ParseError on malformed documents; the returned spec is validated.
CushionSpec cushion_spec_from_json(std::string_view text);

/// Reads {"fs":[[[ints]]], "gs":[[[ints]]]} with an optional "n" (defaults to
/// the largest element mentioned).  Throws ParseError on malformed
/// documents; the returned spec is validated.
LayeredSpec layered_spec_from_json(std::string_view text);

}  // namespace uff
