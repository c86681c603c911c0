#include "rainbowlab/graph.hpp"

#include <algorithm>
#include <string>

#include "rainbowlab/errors.hpp"

namespace rainbowlab {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapExceeded("graph order " + std::to_string(n) + " outside 0.." +
                      std::to_string(kMaxVertices));
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.set_edge(u, v);
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(order()));
  }
}

void Graph::set_edge(int u, int v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw InvalidArgument("loop at vertex " + std::to_string(u));
  }
  if (present) {
    rows_[u] |= vertex_bit(v);
    rows_[v] |= vertex_bit(u);
  } else {
    rows_[u] &= ~vertex_bit(v);
    rows_[v] &= ~vertex_bit(u);
  }
}

void Graph::toggle_edge(int u, int v) { set_edge(u, v, !adjacent(u, v)); }

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask row : rows_) {
    twice += std::popcount(row);
  }
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v = u + 1; v < order(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_vertex(VertexMask neighbors) const {
  const int v = order();
  if (v == kMaxVertices) {
    throw CapExceeded("graph order would exceed " + std::to_string(kMaxVertices));
  }
  if (neighbors >> v != 0) {
    throw InvalidArgument("with_vertex: neighbor outside 0.." + std::to_string(v - 1));
  }
  Graph out = *this;
  out.rows_.push_back(neighbors);
  for (VertexMask rest = neighbors; rest != 0; rest &= rest - 1) {
    out.rows_[std::countr_zero(rest)] |= vertex_bit(v);
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> new_label) const {
  check_permutation(new_label, order());
  Graph out(order());
  for (int u = 0; u < order(); ++u) {
    VertexMask row = 0;
    for (VertexMask rest = rows_[u]; rest != 0; rest &= rest - 1) {
      row |= vertex_bit(new_label[std::countr_zero(rest)]);
    }
    out.rows_[new_label[u]] = row;
  }
  return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph out(static_cast<int>(vertices.size()));
  for (int v : vertices) check_vertex(v);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) {
        throw InvalidArgument("repeated vertex " + std::to_string(vertices[i]));
      }
      if (adjacent(vertices[i], vertices[j])) {
        out.set_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  if (n < 3) {
    throw InvalidArgument("a cycle needs at least 3 vertices");
  }
  for (int v = 0; v < n; ++v) g.set_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1);
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.set_edge(u, v);
  }
  return g;
}

bool is_regular(const Graph& g, int degree) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

bool all_degrees_even(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

void check_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) {
    throw InvalidArgument("permutation has " + std::to_string(perm.size()) +
                          " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[x]) {
      throw InvalidArgument("not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[x] = true;
  }
}

std::vector<int> inverse_permutation(std::span<const int> perm) {
  check_permutation(perm, static_cast<int>(perm.size()));
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

void check_coloring(const Coloring& c, int n) {
  if (static_cast<int>(c.colors.size()) != n) {
    throw InvalidArgument("coloring covers " + std::to_string(c.colors.size()) +
                          " vertices, graph has " + std::to_string(n));
  }
  if (c.k < 0) {
    throw InvalidArgument("negative color count");
  }
  for (int color : c.colors) {
    if (color < 0 || color >= c.k) {
      throw InvalidArgument("color " + std::to_string(color) + " outside 0.." +
                            std::to_string(c.k - 1));
    }
  }
}

}  // namespace rainbowlab
