#include "balgraph/graph6.hpp"

#include <istream>
#include <ostream>

namespace balgraph {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  const std::string_view original = text;
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) throw GraphError("empty graph6 record");
  for (char c : text)
    if (c < 63 || c > 126) throw GraphError("invalid graph6 character in " + quoted(original));

  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw GraphError("unsupported graph6 size header in " + quoted(original));
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw SizeLimitError("graph6 record " + quoted(original) + " has " + std::to_string(n) + " vertices");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars)
    throw GraphError("graph6 record " + quoted(original) + " has wrong length for n=" + std::to_string(n));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int c = text[pos + k / 6] - 63;
      if ((c >> (5 - static_cast<int>(k % 6))) & 1) edges.push_back({i, j});
    }
  if (bits % 6 != 0) {
    const int c = text.back() - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if (c & ((1 << pad) - 1)) throw GraphError("graph6 record " + quoted(original) + " has nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace balgraph
