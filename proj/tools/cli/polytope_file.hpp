#ifndef HILBERT_TOOLS_POLYTOPE_FILE_HPP
#define HILBERT_TOOLS_POLYTOPE_FILE_HPP

#include <cstddef>
#include <string_view>

#include "hilbert/polytope.hpp"

namespace hilbert::cli {

inline constexpr std::size_t kMaxDim = 8;
inline constexpr std::size_t kMaxFacets = 64;

/// Parses the JSON polytope format
///   {"dim": n, "facets": [{"normal": [n numbers], "offset": b}, ...]}
/// where each facet is the halfspace <normal, x> + offset >= 0, then
/// validates the result. Unknown keys and ragged normals are rejected with
/// a ParseError naming the offending field.
Polytope parse_polytope_file(std::string_view text);

}  // namespace hilbert::cli

#endif  // HILBERT_TOOLS_POLYTOPE_FILE_HPP
