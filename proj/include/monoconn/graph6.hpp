#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monoconn/graph.hpp"

namespace monoconn {

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted. Throws GraphError on a malformed size header,
/// characters outside 63..126, wrong length, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Bit-exact graph6 encoding without header or newline.
std::string to_graph6(const Graph& g);

/// Parses a corpus: one graph per line, blank lines skipped. Each line may be
/// graph6 or carry the graph6 header.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// Text starting with a digit is one edge list ("n m" then m pairs);
/// anything else is read as graph6 lines.
std::vector<Graph> parse_graph_input(std::string_view text);

}  // namespace monoconn
