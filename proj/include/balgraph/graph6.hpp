#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "balgraph/graph.hpp"

namespace balgraph {

/// graph6 encoding (6 bits per character, offset 63, upper triangle column by column).
std::string to_graph6(const Graph& g);

/// Parses one graph6 record. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws GraphError naming the offending token.
Graph from_graph6(std::string_view text);

/// Reads a line-delimited graph6 stream; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace balgraph
