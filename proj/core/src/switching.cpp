#include "rainbowlab/switching.hpp"

#include <string>

#include "rainbowlab/errors.hpp"
#include "rainbowlab/graph6.hpp"

namespace rainbowlab {

Graph switch_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw InvalidArgument("switch_vertex: vertex " + std::to_string(v) + " out of range");
  }
  Graph out = g;
  for (int w = 0; w < g.order(); ++w) {
    if (w != v) out.toggle_edge(v, w);
  }
  return out;
}

Graph switch_subset(const Graph& g, VertexMask subset) {
  const int n = g.order();
  const VertexMask all = n == 0 ? 0 : (VertexMask{1} << n) - 1;
  if ((subset & ~all) != 0) {
    throw InvalidArgument("switch_subset: subset contains vertices outside 0.." +
                          std::to_string(n - 1));
  }
  Graph out = g;
  for (int u = 0; u < n; ++u) {
    if (!((subset >> u) & 1U)) continue;
    for (int w = 0; w < n; ++w) {
      if (!((subset >> w) & 1U)) out.toggle_edge(u, w);
    }
  }
  return out;
}

Graph switch_subset(const Graph& g, std::span<const int> subset) {
  VertexMask mask = 0;
  for (int v : subset) {
    if (v < 0 || v >= g.order()) {
      throw InvalidArgument("switch_subset: vertex " + std::to_string(v) + " out of range");
    }
    mask |= vertex_bit(v);
  }
  return switch_subset(g, mask);
}

Graph switching_canonical_form(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap) {
    throw CapExceeded("switching canonical form: order " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  }
  if (n <= 1) return canonical_form(g, cap);

  Graph best;
  std::string best_key;
  // Subsets of {1, ..., n-1}; vertex 0 stays unswitched.
  const VertexMask limit = VertexMask{1} << (n - 1);
  for (VertexMask s = 0; s < limit; ++s) {
    Graph candidate = canonical_form(switch_subset(g, s << 1), cap);
    std::string key = graph6_encode(candidate);
    if (s == 0 || key < best_key) {
      best_key = std::move(key);
      best = std::move(candidate);
    }
  }
  return best;
}

bool are_switching_equivalent(const Graph& g, const Graph& h, int cap) {
  if (g.order() != h.order()) {
    throw InvalidArgument("are_switching_equivalent: orders " + std::to_string(g.order()) +
                          " and " + std::to_string(h.order()) + " differ");
  }
  return switching_canonical_form(g, cap) == switching_canonical_form(h, cap);
}

}  // namespace rainbowlab
