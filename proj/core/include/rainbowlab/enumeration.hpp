#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbowlab/errors.hpp"
#include "rainbowlab/graph.hpp"

namespace rainbowlab {

inline constexpr int kDefaultGraphCap = 7;
inline constexpr int kDefaultRainbowCap = 5;

struct EnumerationOptions {
  int max_n = kDefaultGraphCap;        // cap for graph / switching / even counts
  int max_rainbow_n = kDefaultRainbowCap;
  unsigned workers = 1;                // 0 means hardware concurrency
};

// One canonical representative per isomorphism class of graphs on n
// vertices, sorted by graph6 string. Generation is orderly: a graph on
// m + 1 vertices is kept only if it is canonical, and since a canonical
// graph's first m vertices again form a canonical graph, every class is
// produced exactly once. Throws CapExceeded when n > options.max_n.
std::vector<Graph> enumerate_unlabeled_graphs(int n, const EnumerationOptions& options = {});

// Canonical representatives of all degree-regular graphs on `vertices`
// vertices, sorted by graph6. Same orderly scheme with degree feasibility
// pruning. No cap beyond Graph::kMaxVertices; cost grows quickly past 10.
std::vector<Graph> enumerate_regular_graphs(int vertices, int degree,
                                            const EnumerationOptions& options = {});

struct ClassCount {
  std::size_t count = 0;
  std::vector<std::string> representatives;  // graph6, sorted
};

// Distinct switching_canonical_form values over the unlabeled graphs on n
// vertices.
ClassCount count_switching_classes(int n, const EnumerationOptions& options = {});

// Isomorphism classes of graphs on n vertices with every degree even.
ClassCount count_even_classes(int n, const EnumerationOptions& options = {});

struct RainbowClass {
  Graph graph;        // canonical form
  Coloring coloring;  // a rainbow coloring found by search
};

// Isomorphism classes of n-rainbow graphs on 2n vertices: every n-regular
// graph on 2n vertices, filtered by find_rainbow_coloring. Does not use
// psi. Sorted by graph6. Throws CapExceeded when n > options.max_rainbow_n.
std::vector<RainbowClass> enumerate_rainbow_classes(int n, const EnumerationOptions& options = {});

struct CensusRow {
  int n = 0;
  std::size_t graph_classes = 0;
  std::size_t switching_classes = 0;
  std::size_t even_classes = 0;
  std::size_t rainbow_classes = 0;
  std::size_t regular_graphs = 0;  // n-regular graphs on 2n vertices inspected
  std::vector<std::string> switching_representatives;
  std::vector<std::string> even_representatives;
  std::vector<std::string> rainbow_representatives;
  // graph6 of canonical_form(psi(R)) for each switching representative R,
  // in the same order as switching_representatives.
  std::vector<std::string> psi_images;
  bool from_cache = false;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusOptions {
  EnumerationOptions enumeration;
  // Rows are read from / written to <cache_dir>/census-n<N>.json when set.
  std::optional<std::filesystem::path> cache_dir;
};

// Thrown when the three counts disagree or the psi images of the switching
// representatives do not match the rainbow classes exactly.
class CensusMismatch : public Error {
 public:
  using Error::Error;
};

// Rows for n = 1..n_max. Every row is cross-checked: switching, even and
// rainbow counts agree, psi maps the switching representatives onto the
// rainbow classes injectively, and the two sets are equal. Cached rows
// are re-checked the same way.
std::vector<CensusRow> census(int n_max, const CensusOptions& options = {});

// The checks census() applies to each row. Throws CensusMismatch.
void verify_census_row(const CensusRow& row);

// Computes a single row without touching any cache.
CensusRow compute_census_row(int n, const EnumerationOptions& options = {});

}  // namespace rainbowlab
