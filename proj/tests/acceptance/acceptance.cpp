// One line per criterion: PASS or FAIL, a short measurement, elapsed time.
// Exit status is nonzero if any criterion fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "rainbowlab/bijection.hpp"
#include "rainbowlab/canonical.hpp"
#include "rainbowlab/enumeration.hpp"
#include "rainbowlab/graph6.hpp"
#include "rainbowlab/puzzle.hpp"
#include "rainbowlab/rainbow.hpp"
#include "rainbowlab/signed_matrix.hpp"
#include "rainbowlab/switching.hpp"
#include "support/oracles.hpp"

using namespace rainbowlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit)";
  }
  if (!o.pass) ++failures;
  std::printf("%s  %-28s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), seconds, o.detail.c_str());
  std::fflush(stdout);
}

std::string counts_text(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

bool same_counts(CensusRow a, CensusRow b) {
  a.from_cache = b.from_cache = false;
  return a == b;
}

// Every graph on at most 5 labeled vertices.
template <class F>
std::size_t for_each_small_graph(F&& f) {
  std::size_t count = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      f(g);
      ++count;
    }
  }
  return count;
}

}  // namespace

int main() {
  criterion("census n=1..4", 60, [] {
    std::vector<std::size_t> sw, even, rainbow;
    for (int n = 1; n <= 4; ++n) {
      sw.push_back(count_switching_classes(n).count);
      even.push_back(count_even_classes(n).count);
      rainbow.push_back(enumerate_rainbow_classes(n).size());
    }
    std::vector<std::size_t> census_sw;
    for (const CensusRow& r : census(4)) census_sw.push_back(r.switching_classes);
    const std::vector<std::size_t> expected{1, 1, 2, 3};
    return Outcome{sw == expected && even == expected && rainbow == expected && census_sw == expected,
                   "switching " + counts_text(sw) + " even " + counts_text(even) + " rainbow " +
                       counts_text(rainbow)};
  });

  criterion("census n=5 with cache", 15 * 60, [] {
    const auto dir = std::filesystem::temp_directory_path() / "rainbowlab-acceptance-cache";
    std::filesystem::remove_all(dir);
    CensusOptions options;
    options.cache_dir = dir;
    const std::vector<CensusRow> cold = census(5, options);
    const std::vector<CensusRow> warm = census(5, options);
    std::filesystem::remove_all(dir);
    const CensusRow& r = cold.back();
    bool ok = r.n == 5 && r.switching_classes == 7 && r.even_classes == 7 && r.rainbow_classes == 7 &&
              r.regular_graphs == 60 && !r.from_cache && warm.back().from_cache && cold.size() == warm.size();
    for (std::size_t i = 0; ok && i < cold.size(); ++i) ok = same_counts(cold[i], warm[i]);
    return Outcome{ok, std::to_string(r.switching_classes) + " = " + std::to_string(r.even_classes) + " = " +
                           std::to_string(r.rainbow_classes) + " over " + std::to_string(r.regular_graphs) +
                           " five-regular graphs, cached rerun identical"};
  });

  criterion("psi image equals rainbow set", 0, [] {
    bool ok = true;
    std::size_t total = 0;
    for (int n = 1; n <= 5; ++n) {
      std::set<std::string> images;
      const ClassCount classes = count_switching_classes(n);
      for (const std::string& rep : classes.representatives) {
        images.insert(graph6_encode(canonical_form(psi(graph6_decode(rep)).graph)));
      }
      std::set<std::string> rainbow;
      for (const RainbowClass& c : enumerate_rainbow_classes(n)) rainbow.insert(graph6_encode(c.graph));
      // Equal sets with equal sizes: psi is injective on classes and onto.
      ok = ok && images == rainbow && images.size() == classes.count;
      total += images.size();
    }
    return Outcome{ok, std::to_string(total) + " classes matched for n <= 5"};
  });

  criterion("well-definedness", 0, [] {
    std::size_t checks = 0, bad = 0;
    for_each_small_graph([&](const Graph& g) {
      const Graph image = canonical_form(psi(g).graph);
      for (int v = 0; v < g.order(); ++v) {
        ++checks;
        if (canonical_form(psi(switch_vertex(g, v)).graph) != image) ++bad;
      }
    });
    return Outcome{bad == 0, std::to_string(checks) + " (graph, vertex) pairs, " + std::to_string(bad) + " failures"};
  });

  criterion("round trip", 0, [] {
    std::size_t checks = 0, bad = 0;
    for_each_small_graph([&](const Graph& g) {
      const int n = g.order();
      const RainbowWitness w = psi(g);
      const Graph target = switching_canonical_form(g);
      for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
        std::vector<int> transversal(n);
        for (int i = 0; i < n; ++i) transversal[i] = ((choice >> i) & 1U) ? n + i : i;
        ++checks;
        if (switching_canonical_form(extract(w, transversal)) != target) ++bad;
      }
    });
    return Outcome{bad == 0, std::to_string(checks) + " (graph, transversal) pairs, " + std::to_string(bad) +
                                 " failures"};
  });

  criterion("switching witness trials", 60, [] {
    std::mt19937_64 rng(20240601);
    int bad = 0;
    const int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
      const int n = 1 + trial % 6;
      const Graph g = oracle::random_graph(n, 0.5, rng);
      const VertexMask s = rng() & ((VertexMask{1} << n) - 1);
      const auto perm = oracle::random_permutation(n, rng);
      const Graph h = switch_subset(g, s).relabeled(perm);
      const SeidelMatrix a = seidel_of_graph(g);
      const SeidelMatrix b = seidel_of_graph(h);
      const SignedMatrix ea = SignedMatrix::from_seidel(a);
      const SignedMatrix eb = SignedMatrix::from_seidel(b);

      // prove_switching asserts each intermediate identity along the way.
      const SwitchingWitness built =
          prove_switching(a, b, SignedMatrix::permutation(oracle::doubled_isomorphism(n, s, perm)));
      if (ea != built.q * eb * built.q.transposed()) ++bad;

      const auto iso = find_isomorphism(psi(h).graph, psi(g).graph);
      if (!iso) {
        ++bad;
        continue;
      }
      const SwitchingWitness searched = prove_switching(a, b, SignedMatrix::permutation(*iso));
      if (ea != searched.q * eb * searched.q.transposed()) ++bad;
    }
    return Outcome{bad == 0, std::to_string(trials) + " seeded trials, n <= 6, " + std::to_string(bad) + " failures"};
  });

  criterion("integration example", 0, [] {
    const SignedMatrix s =
        SignedMatrix::from_doubled({{0, -1, 0, 1}, {-1, -1, 0, 0}, {0, 0, -2, 0}, {1, 0, 0, 1}});
    const SignedMatrix reference =
        SignedMatrix::from_integers({{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
    const SignedPermutation t = integrate(SignedHalfPermutation(s));
    const bool ours = is_integration(s, t.matrix());
    const bool theirs = is_integration(s, reference);
    return Outcome{ours && theirs, std::string("computed T ") + (ours ? "valid" : "invalid") + ", reference T " +
                                       (theirs ? "valid" : "invalid")};
  });

  criterion("rainbow facts across census", 0, [] {
    std::size_t colorings = 0, bad = 0;
    for (int n = 1; n <= 5; ++n) {
      for (const RainbowClass& c : enumerate_rainbow_classes(n)) {
        ++colorings;
        if (!is_rainbow_coloring(c.graph, c.coloring) || !check_rainbow_facts(c.graph, c.coloring).all()) ++bad;
      }
      for (const std::string& rep : count_switching_classes(n).representatives) {
        const RainbowWitness w = psi(graph6_decode(rep));
        ++colorings;
        if (!is_rainbow_coloring(w.graph, w.coloring) || !check_rainbow_facts(w.graph, w.coloring).all()) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(colorings) + " colorings, " + std::to_string(bad) + " violations"};
  });

  criterion("puzzle strategy", 120, [] {
    std::size_t cases = 0, bad = 0;
    auto play = [&](const puzzle::Board& b, int target) {
      ++cases;
      const puzzle::FlipResult r = puzzle::wise1_flip(b, target);
      if (puzzle::wise2_guess(r.after) != target || std::popcount(b.mask() ^ r.after.mask()) != 1) ++bad;
    };
    for (int k = 1; k <= 4; ++k) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (1 << k)); ++mask) {
        const puzzle::Board b = puzzle::Board::from_mask(k, mask);
        for (int target = 0; target < (1 << k); ++target) play(b, target);
      }
    }
    const std::size_t exhaustive = cases;
    std::mt19937_64 rng(64);
    for (int i = 0; i < 1'000'000; ++i) {
      const puzzle::Board b = puzzle::Board::from_mask(6, rng());
      play(b, static_cast<int>(rng() % 64));
    }
    return Outcome{bad == 0, std::to_string(exhaustive) + " exhaustive (k <= 4) + " +
                                 std::to_string(cases - exhaustive) + " random (k = 6), " + std::to_string(bad) +
                                 " failures"};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
