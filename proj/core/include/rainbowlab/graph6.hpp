#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "rainbowlab/graph.hpp"

namespace rainbowlab {

// graph6, short form only (n <= 62): one header byte n + 63, then the
// upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed six
// bits per byte, most significant first, each byte offset by 63, with the
// last byte zero-padded.
std::string graph6_encode(const Graph& g);

// Throws ParseError on a bad header byte (including the long-form marker
// '~'), a truncated or overlong body, a byte outside 63..126, or nonzero
// padding bits.
Graph graph6_decode(std::string_view text);

// One graph per line; blank lines and a trailing '\r' are ignored.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace rainbowlab
