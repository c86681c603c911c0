#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rainbowlab {

using Edge = std::pair<int, int>;
using VertexMask = std::uint64_t;

constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

// Simple undirected labeled graph on vertices 0..n-1, stored as one
// adjacency bitmask per vertex. Loops are impossible by construction.
class Graph {
 public:
  static constexpr int kMaxVertices = 62;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(rows_.size()); }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }

  // Throws InvalidArgument for u == v or out-of-range endpoints.
  void set_edge(int u, int v, bool present = true);
  void toggle_edge(int u, int v);

  int edge_count() const;
  // Sorted, each edge as (u, v) with u < v.
  std::vector<Edge> edges() const;

  // Copy with one more vertex, labeled order(), adjacent to `neighbors`.
  Graph with_vertex(VertexMask neighbors) const;

  // new_label[old] is the image of each vertex; must be a permutation.
  Graph relabeled(std::span<const int> new_label) const;
  // Vertex i of the result is vertices[i] of this graph.
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<VertexMask> rows_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite_graph(int a, int b);

bool is_regular(const Graph& g, int degree);
bool all_degrees_even(const Graph& g);

// Throws InvalidArgument unless perm is a permutation of 0..n-1.
void check_permutation(std::span<const int> perm, int n);
std::vector<int> inverse_permutation(std::span<const int> perm);

// Vertex coloring with colors 0..k-1, candidate for the rainbow property.
struct Coloring {
  int k = 0;
  std::vector<int> colors;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Throws InvalidArgument if the coloring does not cover exactly n vertices
// or uses a color outside 0..k-1.
void check_coloring(const Coloring& c, int n);

}  // namespace rainbowlab
