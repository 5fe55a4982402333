#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "oramsey/digraph.hpp"

namespace oramsey {

/// Text arc-list interchange format:
///
///     n <order>
///     <u> <v>
///     ...
///
/// Vertices are 0-indexed decimals, arc lines are sorted by (u, v), lines
/// end in LF and carry no trailing whitespace.
std::string to_arc_list(const OrientedGraph &g);

/// Strict reader for the arc-list format. Throws ParseError naming the
/// offending line on any syntax error, out-of-range vertex, loop, 2-cycle,
/// duplicate or out-of-order arc line.
OrientedGraph parse_arc_list(std::string_view text);

OrientedGraph read_arc_list_file(const std::filesystem::path &path);
void write_arc_list_file(const std::filesystem::path &path, const OrientedGraph &g);

} // namespace oramsey
