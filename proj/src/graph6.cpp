// graph6 reader/writer.
//
// Layout: N(n) followed by R(x), where x is the upper triangle of the
// adjacency matrix read column by column, x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed big-endian into 6-bit groups, each group biased by 63.

#include <cstdint>
#include <limits>
#include <string>

#include "spectre/errors.hpp"
#include "spectre/graph.hpp"

namespace spectre {

namespace {

constexpr int kBias = 63;
constexpr char kWide = 126;
constexpr std::string_view kHeader = ">>graph6<<";

std::uint64_t read_group(std::string_view s, std::size_t pos, std::size_t count) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < count; ++i) value = value << 6 | static_cast<std::uint64_t>(s[pos + i] - kBias);
  return value;
}

void write_group(std::string& out, std::uint64_t value, int count) {
  for (int i = count - 1; i >= 0; --i) out += static_cast<char>(kBias + (value >> (6 * i) & 0x3F));
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  if (text.front() == ':' || text.front() == ';') throw ParseError("graph6: sparse6 input is not supported");
  if (text.front() == '&') throw ParseError("graph6: digraph6 input is not supported");
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < kBias || text[i] > kWide) {
      throw ParseError("graph6: invalid character at offset " + std::to_string(i));
    }
  }

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != kWide) {
    n = read_group(text, 0, 1);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != kWide) {
    if (text.size() < 4) throw ParseError("graph6: truncated vertex count");
    n = read_group(text, 1, 3);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated vertex count");
    n = read_group(text, 2, 6);
    pos = 8;
  }
  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max() / 2)) {
    throw ParseError("graph6: vertex count too large");
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t groups = (bits + 5) / 6;
  if (text.size() - pos != groups) {
    throw ParseError("graph6: expected " + std::to_string(groups) + " adjacency bytes, found " +
                     std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - kBias;
      if (byte >> (5 - k % 6) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    write_group(out, n, 1);
  } else if (n <= 258047) {
    out += kWide;
    write_group(out, n, 3);
  } else {
    out += kWide;
    out += kWide;
    write_group(out, n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(kBias + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(kBias + (acc << (6 - filled)));
  return out;
}

}  // namespace spectre
