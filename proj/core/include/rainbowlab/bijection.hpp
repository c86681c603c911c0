#pragma once

#include <optional>
#include <vector>

#include "rainbowlab/graph.hpp"
#include "rainbowlab/seidel.hpp"

namespace rainbowlab {

// A graph on 2n vertices with its distinguished n-rainbow coloring:
// vertices i and n + i both carry color i.
struct RainbowWitness {
  Graph graph;
  Coloring coloring;

  friend bool operator==(const RainbowWitness&, const RainbowWitness&) = default;
};

// The doubling construction. Vertex i of g keeps label i and its copy gets
// label n + i. Edges: (i, n+i) always; (i, j) and (n+i, n+j) when ij is an
// edge of g; (i, n+j) and (n+i, j) when ij is a non-edge (i != j).
// Requires 1 <= n <= 31.
RainbowWitness psi(const Graph& g);

// [A, I - A; I - A, A]. Equals the Seidel matrix of psi(graph_of_seidel(A)).
SeidelMatrix tilde_seidel(const SeidelMatrix& a);

// For each color, the lower-indexed vertex of its class.
std::vector<int> default_transversal(const Coloring& c);

// The induced subgraph on a transversal (one vertex per color), with the
// vertex of color i relabeled i. The coloring must be rainbow with k = n
// on 2n vertices. Before building the output, every pair of color classes
// is checked to be joined by exactly one of the two perfect matchings
// between them. Throws InvalidArgument on any violation.
Graph extract(const Graph& g, const Coloring& c,
              const std::optional<std::vector<int>>& transversal = std::nullopt);
Graph extract(const RainbowWitness& w,
              const std::optional<std::vector<int>>& transversal = std::nullopt);

}  // namespace rainbowlab
