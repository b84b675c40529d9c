#pragma once

#include <iosfwd>
#include <string>

#include "sepred/graph.hpp"

namespace sepred {

/// Text format, DIMACS-like. Header `p <n> <m>`, then `e <u> <v>` lines with
/// 1-based ids and optional `l <v> <label>` lines. Lines starting with `c`
/// are comments. Edge colors are not part of the format; every parsed edge
/// is black, and the writer drops colors.
ColoredGraph read_graph(std::istream& in);
ColoredGraph read_graph_file(const std::string& path);
ColoredGraph parse_graph(const std::string& text);

/// Writer emits edges sorted, then labels for vertices with label != 0.
void write_graph(std::ostream& out, const ColoredGraph& g);
std::string format_graph(const ColoredGraph& g);

}  // namespace sepred
