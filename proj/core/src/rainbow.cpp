#include "rainbowlab/rainbow.hpp"

#include <algorithm>
#include <string>

#include "rainbowlab/errors.hpp"

namespace rainbowlab {

bool is_rainbow_coloring(const Graph& g, const Coloring& c) {
  check_coloring(c, g.order());
  if (c.k > 63) return false;
  const std::uint64_t all = c.k == 0 ? 0 : (~std::uint64_t{0} >> (64 - c.k));
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != c.k) return false;
    std::uint64_t seen = 0;
    for (VertexMask rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
      seen |= std::uint64_t{1} << c.colors[std::countr_zero(rest)];
    }
    if (seen != all) return false;
  }
  return true;
}

namespace {

// Coloring as a constraint problem: two vertices with a common neighbor
// must get different colors. With every degree equal to k, distinct
// colors on each neighborhood means each neighborhood sees all k colors.
class RainbowSearch {
 public:
  RainbowSearch(const Graph& g, int k) : g_(g), n_(g.order()), k_(k) {
    conflicts_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) {
      for (VertexMask rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
        conflicts_[v] |= g.neighbors(std::countr_zero(rest));
      }
      conflicts_[v] &= ~vertex_bit(v);
    }
    const std::uint64_t all = ~std::uint64_t{0} >> (64 - k);
    domains_.assign(n_, all);
    colors_.assign(n_, -1);
  }

  std::optional<Coloring> run() {
    // Neighbors of vertex 0 pairwise conflict, so any solution can be
    // renamed to give them colors 0..k-1 in ascending vertex order.
    int next_color = 0;
    for (VertexMask rest = g_.neighbors(0); rest != 0; rest &= rest - 1) {
      if (!assign(std::countr_zero(rest), next_color++)) return std::nullopt;
    }
    if (!solve(n_ - k_)) return std::nullopt;
    return Coloring{k_, colors_};
  }

 private:
  // Sets the color and removes it from every unassigned conflicting vertex.
  // Returns false if that leaves some domain empty; the caller restores
  // domains from its snapshot either way.
  bool assign(int v, int color) {
    if (!((domains_[v] >> color) & 1U)) return false;
    colors_[v] = color;
    const std::uint64_t bit = std::uint64_t{1} << color;
    for (VertexMask rest = conflicts_[v]; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (colors_[u] == color) return false;
      if (colors_[u] < 0) {
        domains_[u] &= ~bit;
        if (domains_[u] == 0) return false;
      }
    }
    return true;
  }

  bool solve(int unassigned) {
    if (unassigned == 0) return true;
    int pick = -1;
    int best = 65;
    for (int v = 0; v < n_; ++v) {
      if (colors_[v] >= 0) continue;
      const int options = std::popcount(domains_[v]);
      if (options < best) {
        best = options;
        pick = v;
      }
    }
    if (best == 0) return false;

    const std::vector<std::uint64_t> saved = domains_;
    for (std::uint64_t rest = domains_[pick]; rest != 0; rest &= rest - 1) {
      const int color = std::countr_zero(rest);
      if (assign(pick, color) && solve(unassigned - 1)) return true;
      domains_ = saved;
      colors_[pick] = -1;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  std::vector<VertexMask> conflicts_;
  std::vector<std::uint64_t> domains_;
  std::vector<int> colors_;
};

}  // namespace

std::optional<Coloring> find_rainbow_coloring(const Graph& g, int k) {
  const int n = g.order();
  if (n == 0) return Coloring{std::max(k, 0), {}};
  if (k <= 0 || k > 63) return std::nullopt;
  if (n % (2 * k) != 0 || !is_regular(g, k)) return std::nullopt;

  std::optional<Coloring> found = RainbowSearch(g, k).run();
  if (found) {
    if (!is_rainbow_coloring(g, *found) || !check_rainbow_facts(g, *found).all()) {
      throw InternalCheckFailed("find_rainbow_coloring produced an invalid coloring");
    }
  }
  return found;
}

std::vector<Edge> monochromatic_matching(const Graph& g, const Coloring& c) {
  if (!is_rainbow_coloring(g, c)) {
    throw InvalidArgument("monochromatic_matching: coloring is not rainbow");
  }
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) {
    if (c.colors[u] == c.colors[v]) out.emplace_back(u, v);
  }
  return out;
}

RainbowFacts check_rainbow_facts(const Graph& g, const Coloring& c) {
  check_coloring(c, g.order());
  const int n = g.order();
  RainbowFacts facts;
  facts.regular = is_regular(g, c.k);

  if (c.k > 0 && n % c.k == 0) {
    std::vector<int> sizes(c.k, 0);
    for (int color : c.colors) ++sizes[color];
    facts.balanced_classes =
        std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == n / c.k; });
  } else {
    facts.balanced_classes = n == 0;
  }

  std::vector<int> covered(n, 0);
  for (auto [u, v] : g.edges()) {
    if (c.colors[u] == c.colors[v]) {
      ++covered[u];
      ++covered[v];
    }
  }
  facts.perfect_matching = std::all_of(covered.begin(), covered.end(), [](int x) { return x == 1; });
  facts.order_divisible = c.k > 0 ? n % (2 * c.k) == 0 : n == 0;
  return facts;
}

}  // namespace rainbowlab
