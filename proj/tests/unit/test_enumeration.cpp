#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "rainbowlab/canonical.hpp"
#include "rainbowlab/enumeration.hpp"
#include "rainbowlab/graph6.hpp"
#include "rainbowlab/switching.hpp"
#include "support/oracles.hpp"

using namespace rainbowlab;

namespace {

std::set<std::string> brute_force_classes(int n, bool even_only) {
  std::set<std::string> out;
  for (const Graph& g : oracle::all_labeled_graphs(n)) {
    if (!even_only || all_degrees_even(g)) out.insert(oracle::brute_force_canonical_string(g));
  }
  return out;
}

// Union-find over labeled graphs (indexed by pair mask), joining each
// graph to its vertex switchings and its adjacent transpositions.
std::size_t brute_force_switching_classes(int n) {
  const int pairs = n * (n - 1) / 2;
  const std::size_t total = std::size_t{1} << pairs;
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto mask_of = [&](const Graph& g) {
    std::size_t mask = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++bit) {
        if (g.adjacent(i, j)) mask |= std::size_t{1} << bit;
      }
    }
    return mask;
  };
  for (std::size_t m = 0; m < total; ++m) {
    const Graph g = oracle::graph_from_pair_mask(n, m);
    std::vector<std::size_t> neighbors;
    for (int v = 0; v < n; ++v) neighbors.push_back(mask_of(switch_vertex(g, v)));
    for (int v = 0; v + 1 < n; ++v) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[v], perm[v + 1]);
      neighbors.push_back(mask_of(g.relabeled(perm)));
    }
    for (std::size_t other : neighbors) parent[find(m)] = find(other);
  }
  std::size_t roots = 0;
  for (std::size_t m = 0; m < total; ++m) roots += find(m) == m;
  return roots;
}

// All labeled d-regular graphs on v vertices, by backtracking over pairs.
void labeled_regular(int v, int d, int pair, const std::vector<Edge>& order, Graph& g,
                     std::set<std::string>& classes) {
  if (pair == static_cast<int>(order.size())) {
    if (is_regular(g, d)) classes.insert(graph6_encode(canonical_form(g)));
    return;
  }
  const auto [a, b] = order[pair];
  // (a, v-1) is the last pair touching a; a's degree is final after it.
  const bool closes_a = b == v - 1;
  if (!closes_a || g.degree(a) == d) labeled_regular(v, d, pair + 1, order, g, classes);
  if (g.degree(a) < d && g.degree(b) < d) {
    g.set_edge(a, b);
    if (!closes_a || g.degree(a) == d) labeled_regular(v, d, pair + 1, order, g, classes);
    g.set_edge(a, b, false);
  }
}

std::size_t brute_force_regular_classes(int v, int d) {
  std::vector<Edge> order;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) order.emplace_back(a, b);
  }
  Graph g(v);
  std::set<std::string> classes;
  labeled_regular(v, d, 0, order, g, classes);
  return classes.size();
}

}  // namespace

TEST_CASE("unlabeled graph counts") {
  CHECK(enumerate_unlabeled_graphs(0).size() == 1);
  CHECK(enumerate_unlabeled_graphs(1).size() == 1);
  for (int n = 2; n <= 5; ++n) {
    const auto graphs = enumerate_unlabeled_graphs(n);
    std::set<std::string> got;
    for (const Graph& g : graphs) got.insert(graph6_encode(g));
    CHECK(got == brute_force_classes(n, false));
  }
  CHECK(enumerate_unlabeled_graphs(4).size() == 11);
  CHECK(enumerate_unlabeled_graphs(5).size() == 34);

  std::set<std::string> six;
  for (const Graph& g : oracle::all_labeled_graphs(6)) six.insert(graph6_encode(canonical_form(g)));
  CHECK(enumerate_unlabeled_graphs(6).size() == six.size());
  CHECK(enumerate_unlabeled_graphs(7).size() == 1044);
}

TEST_CASE("enumerated graphs are canonical and sorted") {
  const auto graphs = enumerate_unlabeled_graphs(6);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    REQUIRE(canonical_form(graphs[i]) == graphs[i]);
    if (i > 0) REQUIRE(graph6_encode(graphs[i - 1]) < graph6_encode(graphs[i]));
  }
}

TEST_CASE("enumeration is independent of the worker count") {
  EnumerationOptions one;
  one.workers = 1;
  EnumerationOptions three;
  three.workers = 3;
  CHECK(enumerate_unlabeled_graphs(6, one) == enumerate_unlabeled_graphs(6, three));
  CHECK(enumerate_regular_graphs(10, 4, one) == enumerate_regular_graphs(10, 4, three));
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(enumerate_unlabeled_graphs(8), CapExceeded);
  CHECK_THROWS_AS(count_switching_classes(8), CapExceeded);
  CHECK_THROWS_AS(count_even_classes(8), CapExceeded);
  CHECK_THROWS_AS(enumerate_rainbow_classes(6), CapExceeded);
  EnumerationOptions small;
  small.max_n = 3;
  CHECK_THROWS_AS(enumerate_unlabeled_graphs(4, small), CapExceeded);
}

TEST_CASE("switching class counts") {
  CHECK(count_switching_classes(2).count == 1);
  CHECK(count_switching_classes(4).count == 3);
  CHECK(count_switching_classes(5).count == 7);
  for (int n = 1; n <= 5; ++n) {
    CHECK(count_switching_classes(n).count == brute_force_switching_classes(n));
  }
}

TEST_CASE("even class counts") {
  const ClassCount three = count_even_classes(3);
  CHECK(three.count == 2);
  CHECK(three.representatives == std::vector<std::string>{"B?", "Bw"});
  CHECK(count_even_classes(4).count == 3);
  CHECK(count_even_classes(5).count == 7);
  for (int n = 1; n <= 5; ++n) {
    CHECK(count_even_classes(n).count == brute_force_classes(n, true).size());
  }
}

TEST_CASE("regular graph substrate") {
  CHECK(enumerate_regular_graphs(6, 3).size() == 2);
  CHECK(enumerate_regular_graphs(8, 4).size() == 6);
  CHECK(enumerate_regular_graphs(6, 3).size() == brute_force_regular_classes(6, 3));
  CHECK(enumerate_regular_graphs(8, 4).size() == brute_force_regular_classes(8, 4));
  CHECK(enumerate_regular_graphs(8, 3).size() == brute_force_regular_classes(8, 3));
  CHECK(enumerate_regular_graphs(7, 3).empty());  // odd degree sum
  CHECK(enumerate_regular_graphs(4, 4).empty());
  for (const Graph& g : enumerate_regular_graphs(10, 5)) REQUIRE(is_regular(g, 5));
}

TEST_CASE("rainbow classes") {
  const auto two = enumerate_rainbow_classes(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].graph == canonical_form(cycle_graph(4)));

  const auto three = enumerate_rainbow_classes(3);
  REQUIRE(three.size() == 2);
  std::set<std::string> got{graph6_encode(three[0].graph), graph6_encode(three[1].graph)};
  std::set<std::string> want{graph6_encode(canonical_form(complete_bipartite_graph(3, 3))),
                             graph6_encode(canonical_form(oracle::triangular_prism()))};
  CHECK(got == want);

  CHECK(enumerate_rainbow_classes(4).size() == 3);
  CHECK_THROWS_AS(enumerate_rainbow_classes(0), InvalidArgument);
}

TEST_CASE("census rows and cache") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("rainbowlab-census-test-" + std::to_string(std::random_device{}()));
  CensusOptions options;
  options.cache_dir = dir;

  const auto fresh = census(4, options);
  REQUIRE(fresh.size() == 4);
  const std::size_t expected[][4] = {{1, 1, 1, 1}, {2, 1, 1, 1}, {4, 2, 2, 2}, {11, 3, 3, 3}};
  for (int i = 0; i < 4; ++i) {
    CHECK(fresh[i].n == i + 1);
    CHECK(fresh[i].graph_classes == expected[i][0]);
    CHECK(fresh[i].switching_classes == expected[i][1]);
    CHECK(fresh[i].even_classes == expected[i][2]);
    CHECK(fresh[i].rainbow_classes == expected[i][3]);
    CHECK_FALSE(fresh[i].from_cache);
    CHECK(std::filesystem::exists(dir / ("census-n" + std::to_string(i + 1) + ".json")));
  }

  const auto cached = census(4, options);
  for (int i = 0; i < 4; ++i) {
    CHECK(cached[i].from_cache);
    CensusRow a = cached[i];
    a.from_cache = false;
    CHECK(a == fresh[i]);
  }

  { std::ofstream(dir / "census-n2.json") << "{ not json"; }
  const auto repaired = census(2, options);
  CHECK(repaired[0].from_cache);
  CHECK_FALSE(repaired[1].from_cache);

  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(census(6), CapExceeded);
}

TEST_CASE("census verification reports mismatches") {
  CensusRow row = compute_census_row(3);
  CHECK_NOTHROW(verify_census_row(row));

  CensusRow fewer = row;
  fewer.rainbow_representatives.pop_back();
  fewer.rainbow_classes = fewer.rainbow_representatives.size();
  CHECK_THROWS_AS(verify_census_row(fewer), CensusMismatch);

  CensusRow collide = row;
  collide.psi_images[1] = collide.psi_images[0];
  CHECK_THROWS_AS(verify_census_row(collide), CensusMismatch);

  CensusRow miscounted = row;
  miscounted.even_classes = 5;
  CHECK_THROWS_AS(verify_census_row(miscounted), CensusMismatch);
}
