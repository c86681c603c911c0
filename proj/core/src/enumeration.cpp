#include "rainbowlab/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "rainbowlab/bijection.hpp"
#include "rainbowlab/canonical.hpp"
#include "rainbowlab/graph6.hpp"
#include "rainbowlab/json_io.hpp"
#include "rainbowlab/rainbow.hpp"
#include "rainbowlab/switching.hpp"

namespace rainbowlab {

namespace {

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Allowed and forced neighbors of the vertex appended to `parent`.
struct ExtensionMasks {
  bool feasible = true;
  VertexMask allowed = 0;
  VertexMask required = 0;
  int min_degree = 0;  // for the new vertex
  int max_degree = 0;
};

using ExtensionRule = std::function<ExtensionMasks(const Graph& parent)>;

// Children of parent that are canonical, in increasing mask order.
std::vector<Graph> expand(const Graph& parent, const ExtensionRule& rule, int cap) {
  std::vector<Graph> out;
  const ExtensionMasks masks = rule(parent);
  if (!masks.feasible) return out;
  const VertexMask free = masks.allowed & ~masks.required;

  // Ascending enumeration of the submasks of `free`.
  VertexMask sub = 0;
  while (true) {
    const VertexMask nbrs = masks.required | sub;
    const int degree = std::popcount(nbrs);
    if (degree >= masks.min_degree && degree <= masks.max_degree) {
      Graph child = parent.with_vertex(nbrs);
      if (is_canonical(child, cap)) out.push_back(std::move(child));
    }
    if (sub == free) break;
    sub = (sub - free) & free;
  }
  return out;
}

std::vector<Graph> expand_level(const std::vector<Graph>& level, const ExtensionRule& rule, int cap,
                                unsigned workers) {
  workers = std::min<unsigned>(resolve_workers(workers), std::max<std::size_t>(level.size(), 1));
  std::vector<std::vector<Graph>> chunks(workers);
  auto work = [&](unsigned w) {
    const std::size_t begin = level.size() * w / workers;
    const std::size_t end = level.size() * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) {
      std::vector<Graph> kids = expand(level[i], rule, cap);
      std::move(kids.begin(), kids.end(), std::back_inserter(chunks[w]));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  std::vector<Graph> next;
  for (auto& chunk : chunks) std::move(chunk.begin(), chunk.end(), std::back_inserter(next));
  return next;
}

void sort_by_graph6(std::vector<Graph>& graphs) {
  std::vector<std::pair<std::string, Graph>> keyed;
  keyed.reserve(graphs.size());
  for (auto& g : graphs) keyed.emplace_back(graph6_encode(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  graphs.clear();
  for (auto& [key, g] : keyed) graphs.push_back(std::move(g));
}

std::vector<Graph> orderly_generate(int vertices, const ExtensionRule& rule, unsigned workers) {
  if (vertices == 0) return {Graph(0)};
  const int cap = std::max(kDefaultCanonicalCap, vertices);
  std::vector<Graph> level{Graph(1)};
  for (int m = 1; m < vertices; ++m) {
    level = expand_level(level, rule, cap, workers);
  }
  return level;
}

void check_n(int n, int cap, const char* what) {
  if (n < 0) throw InvalidArgument(std::string(what) + ": negative n");
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
}

}  // namespace

std::vector<Graph> enumerate_unlabeled_graphs(int n, const EnumerationOptions& options) {
  check_n(n, options.max_n, "enumerate_unlabeled_graphs");
  const ExtensionRule any = [](const Graph& parent) {
    ExtensionMasks masks;
    masks.allowed = parent.order() == 0 ? 0 : (VertexMask{1} << parent.order()) - 1;
    masks.max_degree = parent.order();
    return masks;
  };
  std::vector<Graph> graphs = orderly_generate(n, any, options.workers);
  sort_by_graph6(graphs);
  return graphs;
}

std::vector<Graph> enumerate_regular_graphs(int vertices, int degree,
                                            const EnumerationOptions& options) {
  if (vertices < 0 || vertices > Graph::kMaxVertices) {
    throw CapExceeded("enumerate_regular_graphs: vertex count out of range");
  }
  if (degree < 0 || (vertices > 0 && degree >= vertices) || (vertices * degree) % 2 != 0) {
    return {};
  }
  if (vertices == 0) return {Graph(0)};

  const ExtensionRule regular = [vertices, degree](const Graph& parent) {
    ExtensionMasks masks;
    const int m = parent.order();
    const int remaining_after = vertices - m - 1;
    for (int v = 0; v < m; ++v) {
      const int d = parent.degree(v);
      if (d < degree) masks.allowed |= vertex_bit(v);
      if (d + remaining_after < degree) {
        if (d + 1 + remaining_after < degree) masks.feasible = false;
        masks.required |= vertex_bit(v);
      }
    }
    masks.min_degree = std::max(0, degree - remaining_after);
    masks.max_degree = degree;
    return masks;
  };
  std::vector<Graph> graphs = orderly_generate(vertices, regular, options.workers);
  std::erase_if(graphs, [degree](const Graph& g) { return !is_regular(g, degree); });
  sort_by_graph6(graphs);
  return graphs;
}

ClassCount count_switching_classes(int n, const EnumerationOptions& options) {
  check_n(n, options.max_n, "count_switching_classes");
  std::set<std::string> reps;
  for (const Graph& g : enumerate_unlabeled_graphs(n, options)) {
    reps.insert(graph6_encode(switching_canonical_form(g, std::max(kDefaultCanonicalCap, n))));
  }
  return {reps.size(), {reps.begin(), reps.end()}};
}

ClassCount count_even_classes(int n, const EnumerationOptions& options) {
  check_n(n, options.max_n, "count_even_classes");
  std::vector<std::string> reps;
  for (const Graph& g : enumerate_unlabeled_graphs(n, options)) {
    if (all_degrees_even(g)) reps.push_back(graph6_encode(g));
  }
  return {reps.size(), std::move(reps)};
}

std::vector<RainbowClass> enumerate_rainbow_classes(int n, const EnumerationOptions& options) {
  check_n(n, options.max_rainbow_n, "enumerate_rainbow_classes");
  if (n < 1) throw InvalidArgument("enumerate_rainbow_classes: n must be at least 1");
  std::vector<RainbowClass> out;
  for (Graph& g : enumerate_regular_graphs(2 * n, n, options)) {
    if (auto coloring = find_rainbow_coloring(g, n)) {
      out.push_back({std::move(g), std::move(*coloring)});
    }
  }
  return out;
}

namespace {

void attach_psi_images(CensusRow& row) {
  row.psi_images.clear();
  for (const std::string& rep : row.switching_representatives) {
    const Graph g = graph6_decode(rep);
    row.psi_images.push_back(graph6_encode(canonical_form(psi(g).graph, 2 * row.n)));
  }
}

std::string join(const std::vector<std::string>& items) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) out << (i ? " " : "") << items[i];
  return out.str();
}

}  // namespace

CensusRow compute_census_row(int n, const EnumerationOptions& options) {
  check_n(n, options.max_n, "census");
  check_n(n, options.max_rainbow_n, "census (rainbow column)");
  if (n < 1) throw InvalidArgument("census: n must be at least 1");

  CensusRow row;
  row.n = n;
  row.graph_classes = enumerate_unlabeled_graphs(n, options).size();

  ClassCount switching = count_switching_classes(n, options);
  row.switching_classes = switching.count;
  row.switching_representatives = std::move(switching.representatives);

  ClassCount even = count_even_classes(n, options);
  row.even_classes = even.count;
  row.even_representatives = std::move(even.representatives);

  const std::vector<Graph> regular = enumerate_regular_graphs(2 * n, n, options);
  row.regular_graphs = regular.size();
  for (const Graph& g : regular) {
    if (find_rainbow_coloring(g, n)) row.rainbow_representatives.push_back(graph6_encode(g));
  }
  row.rainbow_classes = row.rainbow_representatives.size();

  attach_psi_images(row);
  return row;
}

void verify_census_row(const CensusRow& row) {
  std::ostringstream problems;
  if (row.switching_classes != row.switching_representatives.size() ||
      row.even_classes != row.even_representatives.size() ||
      row.rainbow_classes != row.rainbow_representatives.size() ||
      row.psi_images.size() != row.switching_representatives.size()) {
    problems << " counts do not match representative lists;";
  }
  if (row.switching_classes != row.even_classes || row.even_classes != row.rainbow_classes) {
    problems << " switching=" << row.switching_classes << " even=" << row.even_classes
             << " rainbow=" << row.rainbow_classes << ";";
  }

  std::set<std::string> images;
  std::vector<std::string> collisions;
  for (std::size_t i = 0; i < row.psi_images.size(); ++i) {
    if (!images.insert(row.psi_images[i]).second) {
      collisions.push_back(row.switching_representatives[i] + "->" + row.psi_images[i]);
    }
  }
  const std::set<std::string> rainbow(row.rainbow_representatives.begin(),
                                      row.rainbow_representatives.end());
  std::vector<std::string> not_rainbow;
  std::vector<std::string> not_hit;
  std::set_difference(images.begin(), images.end(), rainbow.begin(), rainbow.end(),
                      std::back_inserter(not_rainbow));
  std::set_difference(rainbow.begin(), rainbow.end(), images.begin(), images.end(),
                      std::back_inserter(not_hit));
  if (!collisions.empty()) problems << " psi not injective on: " << join(collisions) << ";";
  if (!not_rainbow.empty()) problems << " psi images missing from rainbow set: " << join(not_rainbow) << ";";
  if (!not_hit.empty()) problems << " rainbow classes not hit by psi: " << join(not_hit) << ";";

  const std::string report = problems.str();
  if (!report.empty()) {
    throw CensusMismatch("census n=" + std::to_string(row.n) + ":" + report);
  }
}

namespace {

std::filesystem::path cache_file(const std::filesystem::path& dir, int n) {
  return dir / ("census-n" + std::to_string(n) + ".json");
}

std::optional<CensusRow> load_cached(const std::filesystem::path& dir, int n) {
  const auto path = cache_file(dir, n);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    CensusRow row = census_row_from_json(Json::parse(in));
    if (row.n != n) return std::nullopt;
    row.from_cache = true;
    return row;
  } catch (const Json::exception&) {
    return std::nullopt;
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

void store(const std::filesystem::path& dir, const CensusRow& row) {
  std::filesystem::create_directories(dir);
  const auto path = cache_file(dir, row.n);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << to_json(row).dump(2) << '\n';
    if (!out) throw Error("census: cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::vector<CensusRow> census(int n_max, const CensusOptions& options) {
  const EnumerationOptions& enumeration = options.enumeration;
  check_n(n_max, std::min(enumeration.max_n, enumeration.max_rainbow_n), "census");
  std::vector<CensusRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    std::optional<CensusRow> row;
    if (options.cache_dir) {
      row = load_cached(*options.cache_dir, n);
      if (row) attach_psi_images(*row);
    }
    if (!row) {
      row = compute_census_row(n, enumeration);
      if (options.cache_dir) store(*options.cache_dir, *row);
    }
    verify_census_row(*row);
    rows.push_back(std::move(*row));
  }
  return rows;
}

}  // namespace rainbowlab
