#pragma once

// The `belted` command line, as a library so it can be driven from tests.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "belted/polytope.hpp"

namespace belted::cli {

/// args excludes the program name. Exit codes: 0 success, 1 bad input or
/// precondition, 2 identity violation (a bug).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Built-in name (simplex, cube, dodecahedron, barrel, c60, d_k:<k>,
/// prism:<k>), a file path, or "-" for stdin. JSON or planar_code.
Polytope load(const std::string& input);

/// Raw bytes of a file input, or empty for built-ins.
std::string read_source(const std::string& input);

std::uint64_t fnv1a(std::string_view bytes);

}  // namespace belted::cli
