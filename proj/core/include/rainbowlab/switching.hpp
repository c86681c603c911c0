#pragma once

#include <span>

#include "rainbowlab/canonical.hpp"
#include "rainbowlab/graph.hpp"

namespace rainbowlab {

// Complement the adjacency of v with every other vertex.
Graph switch_vertex(const Graph& g, int v);

// Complement every pair across the cut (S, V \ S). Equal to switching the
// members of S one after another, in any order.
Graph switch_subset(const Graph& g, VertexMask subset);
Graph switch_subset(const Graph& g, std::span<const int> subset);

// Representative constant on switching classes and under relabeling: the
// least (by graph6) canonical form of switch_subset(g, S) over all S with
// vertex 0 not in S. S and its complement give the same graph, so these
// 2^(n-1) subsets cover the class.
Graph switching_canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

// Throws InvalidArgument when the vertex counts differ.
bool are_switching_equivalent(const Graph& g, const Graph& h, int cap = kDefaultCanonicalCap);

}  // namespace rainbowlab
