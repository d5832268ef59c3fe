#include "monoconn/graph6.hpp"

#include <sstream>

namespace monoconn {

namespace {

constexpr int kBias = 63;
constexpr int kMaxChar = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int chunk(char ch) {
  const int value = static_cast<unsigned char>(ch);
  if (value < kBias || value > kMaxChar) {
    throw GraphError("graph6: character " + std::to_string(value) + " outside 63..126");
  }
  return value - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw GraphError("graph6: empty input");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != kMaxChar) {
    n = chunk(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != kMaxChar) {
    if (text.size() < 4) throw GraphError("graph6: truncated size header");
    n = (chunk(text[1]) << 12) | (chunk(text[2]) << 6) | chunk(text[3]);
    if (n < 63) throw GraphError("graph6: non-canonical size header");
    pos = 4;
  } else {
    if (text.size() < 8) throw GraphError("graph6: truncated size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | chunk(text[i]);
    if (n < 258048) throw GraphError("graph6: non-canonical size header");
    pos = 8;
  }
  if (n > (1 << 16)) throw GraphError("graph6: order " + std::to_string(n) + " too large");

  const long long bits = n * (n - 1) / 2;
  const long long expected = (bits + 5) / 6;
  const auto body = text.substr(pos);
  if (static_cast<long long>(body.size()) != expected) {
    throw GraphError("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                     std::to_string(body.size()));
  }

  std::vector<std::pair<int, int>> pairs;
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int value = chunk(body[k / 6]);
      if (value & (1 << (5 - k % 6))) pairs.emplace_back(u, v);
    }
  }
  for (; k < expected * 6; ++k) {
    if (chunk(body[k / 6]) & (1 << (5 - k % 6))) {
      throw GraphError("graph6: trailing bits nonzero");
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), pairs);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back(static_cast<char>(kMaxChar));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.push_back(static_cast<char>(kMaxChar));
    out.push_back(static_cast<char>(kMaxChar));
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> graphs;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \r\t") == std::string::npos) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

std::vector<Graph> parse_graph_input(std::string_view text) {
  const auto start = text.find_first_not_of(" \r\n\t");
  if (start == std::string_view::npos) throw GraphError("empty graph input");
  if (text[start] >= '0' && text[start] <= '9') return {parse_edge_list_text(text)};
  return parse_graph6_lines(text);
}

}  // namespace monoconn
