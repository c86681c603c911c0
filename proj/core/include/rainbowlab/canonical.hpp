#pragma once

#include <optional>
#include <vector>

#include "rainbowlab/graph.hpp"

namespace rainbowlab {

inline constexpr int kDefaultCanonicalCap = 12;

struct CanonicalLabeling {
  // new_label[v] is the position of vertex v in the canonical ordering.
  std::vector<int> new_label;
  Graph graph;
};

// Canonical form: the relabeling of g whose graph6 string is
// lexicographically least over all n! labelings. Two graphs are isomorphic
// iff their canonical forms are equal. Throws CapExceeded if
// g.order() > cap.
//
// The search places vertices one at a time. The graph6 bits for the
// vertex at position j are its adjacencies to positions 0..j-1, so the
// least string must place a vertex with the least such column at every
// step; ties branch, and candidates that are twins of an already explored
// candidate are skipped (swapping twins is an automorphism fixing the
// placed prefix).
CanonicalLabeling canonical_labeling(const Graph& g, int cap = kDefaultCanonicalCap);
Graph canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

// True iff g already is its own canonical form. Stops at the first
// labeling that beats the identity, so it is much cheaper than comparing
// against canonical_form(g).
bool is_canonical(const Graph& g, int cap = kDefaultCanonicalCap);

bool are_isomorphic(const Graph& g, const Graph& h, int cap = kDefaultCanonicalCap);

// A vertex map f with h.adjacent(f[u], f[v]) == g.adjacent(u, v), if any.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 int cap = kDefaultCanonicalCap);

}  // namespace rainbowlab
