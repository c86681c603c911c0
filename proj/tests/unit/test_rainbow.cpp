#include <random>

#include "doctest.h"
#include "rainbowlab/enumeration.hpp"
#include "rainbowlab/errors.hpp"
#include "rainbowlab/rainbow.hpp"
#include "support/oracles.hpp"

using namespace rainbowlab;

TEST_CASE("is_rainbow_coloring examples") {
  const Graph c4 = cycle_graph(4);
  CHECK(is_rainbow_coloring(c4, Coloring{2, {0, 0, 1, 1}}));
  CHECK_FALSE(is_rainbow_coloring(c4, Coloring{2, {0, 1, 0, 1}}));
  CHECK(is_rainbow_coloring(complete_bipartite_graph(3, 3), Coloring{3, {0, 1, 2, 0, 1, 2}}));
  CHECK_FALSE(is_rainbow_coloring(path_graph(3), Coloring{1, {0, 0, 0}}));
}

TEST_CASE("is_rainbow_coloring rejects malformed colorings") {
  CHECK_THROWS_AS(is_rainbow_coloring(cycle_graph(4), Coloring{2, {0, 0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(is_rainbow_coloring(cycle_graph(4), Coloring{2, {0, 0, 1, 2}}), InvalidArgument);
}

TEST_CASE("find_rainbow_coloring examples") {
  CHECK_FALSE(find_rainbow_coloring(complete_graph(4), 3));
  CHECK_FALSE(find_rainbow_coloring(oracle::petersen_graph(), 3));

  const Graph prism = oracle::triangular_prism();
  const auto found = find_rainbow_coloring(prism, 3);
  REQUIRE(found);
  CHECK(is_rainbow_coloring(prism, *found));
  for (int i = 0; i < 3; ++i) CHECK(found->colors[i] == found->colors[i + 3]);

  const auto k2 = find_rainbow_coloring(complete_graph(2), 1);
  REQUIRE(k2);
  CHECK(k2->colors == std::vector<int>{0, 0});

  CHECK(find_rainbow_coloring(Graph(0), 2) == Coloring{2, {}});
  CHECK_FALSE(find_rainbow_coloring(Graph(2), 0));
}

TEST_CASE("search fixes vertex 0's neighbors to ascending colors") {
  const Graph k33 = complete_bipartite_graph(3, 3);
  const auto found = find_rainbow_coloring(k33, 3);
  REQUIRE(found);
  CHECK(found->colors[3] == 0);
  CHECK(found->colors[4] == 1);
  CHECK(found->colors[5] == 2);
  CHECK(find_rainbow_coloring(k33, 3) == found);  // deterministic
}

TEST_CASE("monochromatic_matching") {
  CHECK(monochromatic_matching(cycle_graph(4), Coloring{2, {0, 0, 1, 1}}) ==
        std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(monochromatic_matching(complete_bipartite_graph(3, 3), Coloring{3, {0, 1, 2, 0, 1, 2}}) ==
        std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(monochromatic_matching(complete_graph(2), Coloring{1, {0, 0}}) == std::vector<Edge>{{0, 1}});
  CHECK_THROWS_AS(monochromatic_matching(cycle_graph(4), Coloring{2, {0, 1, 0, 1}}), InvalidArgument);
}

TEST_CASE("rainbow facts") {
  const RainbowFacts good = check_rainbow_facts(cycle_graph(4), Coloring{2, {0, 0, 1, 1}});
  CHECK(good.all());
  const RainbowFacts bad = check_rainbow_facts(path_graph(3), Coloring{2, {0, 1, 1}});
  CHECK_FALSE(bad.regular);
  CHECK_FALSE(bad.order_divisible);
}

namespace {

void check_against_brute_force(const Graph& g, int k) {
  const auto found = find_rainbow_coloring(g, k);
  REQUIRE(found.has_value() == oracle::brute_force_has_rainbow(g, k));
  if (found) {
    REQUIRE(oracle::rainbow_by_counting(g, found->colors, k));
    const RainbowFacts facts = check_rainbow_facts(g, *found);
    REQUIRE(facts.all());
  }
}

}  // namespace

TEST_CASE("search agrees with brute force on every graph up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      for (int k = 1; k <= 3; ++k) check_against_brute_force(g, k);
    }
  }
}

TEST_CASE("search agrees with brute force on regular graphs with 6 and 8 vertices") {
  for (const Graph& g : oracle::all_labeled_graphs(6)) {
    for (int k = 1; k <= 3; ++k) {
      if (is_regular(g, k)) check_against_brute_force(g, k);
    }
  }
  std::mt19937_64 rng(8);
  for (int k = 1; k <= 4; ++k) {
    for (const Graph& g : enumerate_regular_graphs(8, k)) {
      check_against_brute_force(g.relabeled(oracle::random_permutation(8, rng)), k);
    }
  }
}

TEST_CASE("search agrees with brute force on random irregular graphs") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(7 + trial % 2, 0.4, rng);
    check_against_brute_force(g, 2);
  }
}
