#pragma once

#include <filesystem>
#include <iosfwd>

#include "xforge/graph.hpp"

namespace xforge {

// Text ".rot" format, 1-based:
//   N M
//   u k v l        (N*M lines, row-major in (u, k))
// Lines whose first non-blank character is '#' are skipped, as are blank lines.

/// Strict reader. Any malformed, out-of-order or non-bijective table raises
/// ParseError.
LabelledDigraph read_rot(std::istream& in);
LabelledDigraph read_rot_file(const std::filesystem::path& path);

void write_rot(std::ostream& out, const LabelledDigraph& g);
void write_rot_file(const std::filesystem::path& path, const LabelledDigraph& g);

}  // namespace xforge
