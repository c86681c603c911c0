#pragma once

#include <optional>
#include <vector>

#include "rainbowlab/graph.hpp"

namespace rainbowlab {

// Every color 0..k-1 occurs exactly once in the open neighborhood of every
// vertex. Throws InvalidArgument if c does not color g's vertices with
// colors in 0..k-1.
bool is_rainbow_coloring(const Graph& g, const Coloring& c);

// Exhaustive backtracking search for a k-rainbow coloring. std::nullopt is
// a proof that none exists.
//
// Graphs that are not k-regular, or whose order is not a multiple of 2k,
// are rejected before any search. The neighbors of vertex 0 are fixed to
// colors 0..k-1 in ascending vertex order, which quotients out color
// renaming; the search then colors the most constrained vertex first.
// The result is deterministic.
std::optional<Coloring> find_rainbow_coloring(const Graph& g, int k);

// The edges whose endpoints share a color; a perfect matching whenever c
// is rainbow. Throws InvalidArgument if c is not a rainbow coloring of g.
std::vector<Edge> monochromatic_matching(const Graph& g, const Coloring& c);

// Structural facts that hold for any k-rainbow coloring.
struct RainbowFacts {
  bool regular = false;             // every degree equals k
  bool balanced_classes = false;    // every color class has |V| / k vertices
  bool perfect_matching = false;    // monochromatic edges cover V exactly once
  bool order_divisible = false;     // 2k divides |V|

  bool all() const { return regular && balanced_classes && perfect_matching && order_divisible; }
};

RainbowFacts check_rainbow_facts(const Graph& g, const Coloring& c);

}  // namespace rainbowlab
