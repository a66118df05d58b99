#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "belted/polytope.hpp"

namespace belted::io {

enum class Format { Json, PlanarCode };

/// Parses and validates; throws PolytopeError (kind Malformed for syntax errors).
Polytope parse(std::string_view source, Format format);

/// Picks planar_code when the source starts with its header, JSON otherwise.
Polytope parse_auto(std::string_view source);

/// Facet cycles of a JSON document, without validation; throws PolytopeError
/// (Malformed) on syntax errors.
std::vector<Cycle> parse_json_facets(std::string_view source);

/// All graphs in a planar_code stream.
std::vector<Polytope> parse_planar_code_all(std::string_view source);

/// {"facets":[[...],...]} with no whitespace; parse(to_json(p)) reproduces p exactly.
std::string to_json(const Polytope& p);

/// Undirected vertex-edge graph.
std::string to_dot(const Polytope& p);

/// Header plus one graph; neighbours listed in rotation order, 1-based.
std::string to_planar_code(const Polytope& p);

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

}  // namespace belted::io
