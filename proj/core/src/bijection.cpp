#include "rainbowlab/bijection.hpp"

#include <array>
#include <string>

#include "rainbowlab/errors.hpp"
#include "rainbowlab/rainbow.hpp"

namespace rainbowlab {

RainbowWitness psi(const Graph& g) {
  const int n = g.order();
  if (n < 1 || 2 * n > Graph::kMaxVertices) {
    throw InvalidArgument("psi: order " + std::to_string(n) + " outside 1.." +
                          std::to_string(Graph::kMaxVertices / 2));
  }
  RainbowWitness w{Graph(2 * n), Coloring{n, std::vector<int>(2 * n)}};
  for (int i = 0; i < n; ++i) {
    w.graph.set_edge(i, n + i);
    w.coloring.colors[i] = i;
    w.coloring.colors[n + i] = i;
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) {
        w.graph.set_edge(i, j);
        w.graph.set_edge(n + i, n + j);
      } else {
        w.graph.set_edge(n + i, j);
        w.graph.set_edge(i, n + j);
      }
    }
  }
  return w;
}

SeidelMatrix tilde_seidel(const SeidelMatrix& a) {
  const int n = a.order();
  std::vector<std::vector<int>> rows(2 * n, std::vector<int>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int same = a.at(i, j);
      const int cross = (i == j ? 1 : 0) - a.at(i, j);
      rows[i][j] = same;
      rows[n + i][n + j] = same;
      rows[i][n + j] = cross;
      rows[n + i][j] = cross;
    }
  }
  return SeidelMatrix(std::move(rows));
}

std::vector<int> default_transversal(const Coloring& c) {
  std::vector<int> pick(c.k, -1);
  for (int v = 0; v < static_cast<int>(c.colors.size()); ++v) {
    int& slot = pick[c.colors[v]];
    if (slot < 0) slot = v;
  }
  return pick;
}

namespace {

// classes[i] = the two vertices of color i.
std::vector<std::array<int, 2>> color_pairs(const Coloring& c) {
  std::vector<std::array<int, 2>> classes(c.k, {-1, -1});
  std::vector<int> filled(c.k, 0);
  for (int v = 0; v < static_cast<int>(c.colors.size()); ++v) {
    const int color = c.colors[v];
    if (filled[color] == 2) {
      throw InvalidArgument("extract: color " + std::to_string(color) + " has more than two vertices");
    }
    classes[color][filled[color]++] = v;
  }
  for (int color = 0; color < c.k; ++color) {
    if (filled[color] != 2) {
      throw InvalidArgument("extract: color " + std::to_string(color) + " does not have two vertices");
    }
  }
  return classes;
}

}  // namespace

Graph extract(const Graph& g, const Coloring& c, const std::optional<std::vector<int>>& transversal) {
  const int n = c.k;
  if (g.order() != 2 * n || n < 1) {
    throw InvalidArgument("extract: expected 2k vertices for k = " + std::to_string(n) + ", got " +
                          std::to_string(g.order()));
  }
  if (!is_rainbow_coloring(g, c)) {
    throw InvalidArgument("extract: coloring is not rainbow");
  }

  const auto classes = color_pairs(c);
  for (int a = 0; a < n; ++a) {
    const auto [a0, a1] = classes[a];
    if (!g.adjacent(a0, a1)) {
      throw InvalidArgument("extract: color class " + std::to_string(a) + " is not an edge");
    }
    for (int b = a + 1; b < n; ++b) {
      const auto [b0, b1] = classes[b];
      const bool straight = g.adjacent(a0, b0) && g.adjacent(a1, b1);
      const bool crossed = g.adjacent(a0, b1) && g.adjacent(a1, b0);
      const int cross_edges = g.adjacent(a0, b0) + g.adjacent(a1, b1) + g.adjacent(a0, b1) +
                              g.adjacent(a1, b0);
      if (cross_edges != 2 || !(straight || crossed)) {
        throw InvalidArgument("extract: color classes " + std::to_string(a) + " and " +
                              std::to_string(b) + " are not joined by a perfect matching");
      }
    }
  }

  std::vector<int> picked = transversal ? *transversal : default_transversal(c);
  if (static_cast<int>(picked.size()) != n) {
    throw InvalidArgument("extract: transversal must contain exactly one vertex per color");
  }
  std::vector<int> by_color(n, -1);
  for (int v : picked) {
    if (v < 0 || v >= g.order()) {
      throw InvalidArgument("extract: transversal vertex " + std::to_string(v) + " out of range");
    }
    int& slot = by_color[c.colors[v]];
    if (slot >= 0) {
      throw InvalidArgument("extract: transversal repeats color " + std::to_string(c.colors[v]));
    }
    slot = v;
  }
  return g.induced(by_color);
}

Graph extract(const RainbowWitness& w, const std::optional<std::vector<int>>& transversal) {
  return extract(w.graph, w.coloring, transversal);
}

}  // namespace rainbowlab
