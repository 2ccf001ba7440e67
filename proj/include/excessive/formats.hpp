#pragma once

#include <string>

#include "excessive/graph.hpp"

namespace excessive {

enum class GraphFormat {
    graph6,
    edge_list,
    cat_notation,
};

// graph6 text encoding (n <= 62). Accepts an optional ">>graph6<<" header
// prefix on parse; rejects trailing garbage and nonzero padding bits.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Whitespace/comment edge list:
//   first non-comment line: "<n> <m>", then m lines "u v" (0-based).
// '#' starts a comment.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// "cat(a,b,...,z)" caterpillar leg-count notation.
Graph parse_cat_notation(const std::string& text);
std::string cat_notation(const std::vector<int>& legs);

Graph load_graph(const std::string& text, GraphFormat fmt);

// Guess the format from the text shape: "cat(" prefix, a line with two
// integers, else graph6.
Graph load_graph_auto(const std::string& text);

}  // namespace excessive
