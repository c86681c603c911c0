#include "rainbowlab/graph6.hpp"

#include <string>

#include "rainbowlab/errors.hpp"

namespace rainbowlab {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(n + kOffset));

  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kOffset));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
  }
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) {
    throw ParseError("graph6: empty string");
  }
  const int header = static_cast<unsigned char>(text[0]);
  if (header == kMaxByte) {
    throw ParseError("graph6: long form (n > 62) is not supported");
  }
  if (header < kOffset || header > kMaxByte) {
    throw ParseError("graph6: bad header byte " + std::to_string(header));
  }
  const int n = header - kOffset;
  const std::size_t expected = body_length(n);
  if (text.size() - 1 < expected) {
    throw ParseError("graph6: truncated, expected " + std::to_string(expected) +
                     " body bytes, got " + std::to_string(text.size() - 1));
  }
  if (text.size() - 1 > expected) {
    throw ParseError("graph6: " + std::to_string(text.size() - 1 - expected) +
                     " trailing bytes after body");
  }

  Graph g(n);
  std::size_t pos = 1;
  int group = 0;
  int remaining = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (remaining == 0) {
        const int byte = static_cast<unsigned char>(text[pos]);
        if (byte < kOffset || byte > kMaxByte) {
          throw ParseError("graph6: byte " + std::to_string(byte) + " at offset " +
                           std::to_string(pos) + " outside 63..126");
        }
        group = byte - kOffset;
        remaining = 6;
        ++pos;
      }
      --remaining;
      if ((group >> remaining) & 1) g.set_edge(i, j);
    }
  }
  if (remaining > 0 && (group & ((1 << remaining) - 1)) != 0) {
    throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

}  // namespace rainbowlab
