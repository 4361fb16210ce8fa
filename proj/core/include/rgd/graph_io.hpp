#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace rgd {

// graph6: printable 6-bit encoding. Size header is one byte (n + 63) for
// n <= 62, '~' plus 3 bytes for n <= 258047, '~~' plus 6 bytes beyond that;
// then the upper triangle of the adjacency matrix in column-major order,
// packed big-endian six bits per byte and zero-padded.
Graph parse_graph6(std::string_view record);
std::string to_graph6(const Graph& g);
// One record per non-empty line; a leading ">>graph6<<" header is accepted.
std::vector<Graph> parse_graph6_file(std::string_view text);

// Plain text: first line n, then one "u v" line per edge. '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Graph expressions used by the CLI and tests: "cycle:9", "complete:5",
// "gp:20,4", "petersen", "sylvester", "hs", "random:22,3,7",
// "union:cycle:5+cycle:6" (any number of '+' parts), or a path to a file
// holding an edge list or graph6 record.
Graph graph_from_spec(const std::string& spec);

}  // namespace rgd
