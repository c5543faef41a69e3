#pragma once

#include <iosfwd>
#include <string>

#include "frl/complex.hpp"

namespace frl {

/// {"m": int, "facets": [[int, ...], ...]}
std::string to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const std::string& text);

/// First non-comment line is m, then one facet per line as space-separated
/// vertices. Lines starting with '#' are ignored. An empty line stands for
/// the empty facet.
std::string to_text(const SimplicialComplex& complex);
SimplicialComplex complex_from_text(const std::string& text);

/// Picks the JSON or text reader by the first non-blank character.
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex read_complex_file(const std::string& path);

}  // namespace frl
