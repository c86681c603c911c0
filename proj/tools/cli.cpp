#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "puzzle_server.hpp"
#include "rainbowlab/bijection.hpp"
#include "rainbowlab/canonical.hpp"
#include "rainbowlab/enumeration.hpp"
#include "rainbowlab/errors.hpp"
#include "rainbowlab/graph6.hpp"
#include "rainbowlab/json_io.hpp"
#include "rainbowlab/rainbow.hpp"
#include "rainbowlab/signed_matrix.hpp"
#include "rainbowlab/switching.hpp"

namespace rainbowlab::cli {

namespace {

// Bad invocation that CLI11 cannot see, such as a missing graph.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_source(const std::string& source) {
  if (source == "-") return read_all(std::cin);
  std::ifstream in(source);
  if (!in) throw UsageError("cannot open '" + source + "'");
  return read_all(in);
}

// Inline JSON if it starts like a document, otherwise a path or "-".
Json read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const bool inline_doc = first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
  const std::string text = inline_doc ? arg : read_source(arg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

std::vector<int> parse_int_list(std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::vector<int> values;
  for (std::string token; in >> token;) {
    int v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || end != token.data() + token.size()) throw ParseError("bad integer '" + token + "'");
    values.push_back(v);
  }
  return values;
}

std::string join(const std::vector<int>& values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

struct Inputs {
  std::vector<std::string> g6;
  std::string file;
  std::string json;
};

void add_graph_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--g6", in.g6, "graph6 string (repeatable)");
  cmd->add_option("--file", in.file, "file of graph6 lines, '-' for stdin");
  cmd->add_option("--json", in.json, "JSON graph or array of graphs, inline or a path");
}

Graph graph_from_any_json(const Json& j) {
  if (j.is_object() && j.contains("graph")) return graph_from_json(j.at("graph"));
  if (j.is_object() && j.contains("graph6")) {
    if (!j.at("graph6").is_string()) throw ParseError("JSON: 'graph6' must be a string");
    return graph6_decode(j.at("graph6").get<std::string>());
  }
  return graph_from_json(j);
}

std::vector<Graph> load_graphs(const Inputs& in) {
  std::vector<Graph> graphs;
  for (const std::string& s : in.g6) graphs.push_back(graph6_decode(s));
  if (!in.file.empty()) {
    std::istringstream lines(read_source(in.file));
    for (Graph& g : read_graph6_lines(lines)) graphs.push_back(std::move(g));
  }
  if (!in.json.empty()) {
    const Json j = read_json_arg(in.json);
    if (j.is_array()) {
      for (const Json& item : j) graphs.push_back(graph_from_any_json(item));
    } else {
      graphs.push_back(graph_from_any_json(j));
    }
  }
  if (graphs.empty()) throw UsageError("no input graph: use --g6, --file or --json");
  return graphs;
}

struct ColoringInputs {
  std::string colors;
  int k = 0;
};

void add_coloring_inputs(CLI::App* cmd, ColoringInputs& in) {
  cmd->add_option("--coloring", in.colors, "vertex colors, comma or space separated");
  cmd->add_option("--k", in.k, "number of colors (default: largest color + 1)");
}

// A graph with its coloring, from --json witnesses or --coloring applied to
// every graph.
std::vector<RainbowWitness> load_witnesses(const Inputs& in, const ColoringInputs& cin) {
  if (cin.colors.empty()) {
    if (!in.json.empty() && in.g6.empty() && in.file.empty()) {
      const Json j = read_json_arg(in.json);
      std::vector<RainbowWitness> out;
      if (j.is_array()) {
        for (const Json& item : j) out.push_back(witness_from_json(item));
      } else {
        out.push_back(witness_from_json(j));
      }
      return out;
    }
    throw UsageError("no coloring: use --coloring or a JSON {graph, coloring}");
  }
  Coloring c;
  c.colors = parse_int_list(cin.colors);
  c.k = cin.k;
  if (c.k == 0 && !c.colors.empty()) c.k = *std::max_element(c.colors.begin(), c.colors.end()) + 1;
  std::vector<RainbowWitness> out;
  for (Graph& g : load_graphs(in)) {
    check_coloring(c, g.order());
    out.push_back({std::move(g), c});
  }
  return out;
}

SignedMatrix load_matrix(const std::string& text, const std::string& file, const std::string& json) {
  const int given = !text.empty() + !file.empty() + !json.empty();
  if (given != 1) throw UsageError("give exactly one of --matrix, --file, --json");
  if (!text.empty()) return parse_signed_matrix(text);
  if (!file.empty()) return parse_signed_matrix(read_source(file));
  return signed_matrix_from_json(read_json_arg(json));
}

Json graph_json(const Graph& g) { return {{"graph6", graph6_encode(g)}, {"graph", to_json(g)}}; }

class Printer {
 public:
  Printer(std::ostream& out, bool json) : out_(out), json_(json) {}

  bool json() const { return json_; }

  void line(std::string_view text) {
    if (json_) return;
    if (text.ends_with('\n')) text.remove_suffix(1);
    out_ << text << '\n';
  }
  void item(Json j) { items_.push_back(std::move(j)); }

  // JSON output is an array of per-input results, or a single object when
  // the command has one result by nature.
  void finish(bool single = false) {
    if (!json_) return;
    out_ << (single && items_.size() == 1 ? items_.front() : items_).dump(2) << '\n';
  }

 private:
  std::ostream& out_;
  bool json_;
  Json items_ = Json::array();
};

void print_graphs(Printer& p, const std::vector<Graph>& results) {
  for (const Graph& g : results) {
    p.line(graph6_encode(g));
    p.item(graph_json(g));
  }
  p.finish();
}

SignedPermutation checked_witness(const Graph& g, const Graph& h, const SignedMatrix& p) {
  const SeidelMatrix a = seidel_of_graph(g);
  const SeidelMatrix b = seidel_of_graph(h);
  const SignedPermutation q = witness_switching_q(a, b, p);
  if (SignedMatrix::from_seidel(a) != q.matrix() * SignedMatrix::from_seidel(b) * q.matrix().transposed()) {
    throw InternalCheckFailed("witness: A = Q B Q^T does not hold");
  }
  return q;
}

// A permutation matrix carrying the doubled graph of h onto that of g, or
// nothing when g and h are not switching equivalent.
std::optional<SignedMatrix> doubled_isomorphism(const Graph& g, const Graph& h) {
  const auto iso = find_isomorphism(psi(h).graph, psi(g).graph);
  if (!iso) return std::nullopt;
  return SignedMatrix::permutation(*iso);
}

std::string census_table(const std::vector<CensusRow>& rows) {
  std::ostringstream s;
  s << std::setw(3) << "n" << std::setw(11) << "switching" << std::setw(6) << "even" << std::setw(9) << "rainbow"
    << std::setw(8) << "graphs" << std::setw(9) << "regular" << '\n';
  for (const CensusRow& r : rows) {
    s << std::setw(3) << r.n << std::setw(11) << r.switching_classes << std::setw(6) << r.even_classes
      << std::setw(9) << r.rainbow_classes << std::setw(8) << r.graph_classes << std::setw(9) << r.regular_graphs
      << '\n';
  }
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow colorings, switching classes and the doubling bijection.", "rainbowlab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  Inputs in;
  ColoringInputs colors;

  auto* psi_cmd = app.add_subcommand("psi", "doubled graph with its rainbow coloring");
  add_graph_inputs(psi_cmd, in);

  auto* extract_cmd = app.add_subcommand("extract", "switching-class representative from a rainbow graph");
  add_graph_inputs(extract_cmd, in);
  add_coloring_inputs(extract_cmd, colors);
  std::string transversal;
  extract_cmd->add_option("--transversal", transversal, "one vertex per color, in color order");

  auto* switch_cmd = app.add_subcommand("switch", "switch a graph with respect to a vertex set");
  add_graph_inputs(switch_cmd, in);
  std::string vertices;
  switch_cmd->add_option("--vertices", vertices, "vertices to switch, comma separated")->required();

  auto* equiv_cmd = app.add_subcommand("switch-equiv", "are two graphs switching equivalent");
  add_graph_inputs(equiv_cmd, in);

  auto* switch_canon_cmd = app.add_subcommand("switch-canon", "canonical representative of the switching class");
  add_graph_inputs(switch_canon_cmd, in);

  auto* canon_cmd = app.add_subcommand("canon", "canonical form up to isomorphism");
  add_graph_inputs(canon_cmd, in);

  auto* color_cmd = app.add_subcommand("rainbow-color", "search for a k-rainbow coloring");
  add_graph_inputs(color_cmd, in);
  int k = 0;
  color_cmd->add_option("--k", k, "number of colors")->required()->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("rainbow-check", "is a coloring rainbow");
  add_graph_inputs(check_cmd, in);
  add_coloring_inputs(check_cmd, colors);

  auto* matching_cmd = app.add_subcommand("matching", "monochromatic edges of a rainbow coloring");
  add_graph_inputs(matching_cmd, in);
  add_coloring_inputs(matching_cmd, colors);

  std::string matrix_text, matrix_file, matrix_json;
  auto* integrate_cmd = app.add_subcommand("integrate", "integrate a signed half-permutation matrix");
  integrate_cmd->add_option("--matrix", matrix_text, "rows separated by ';', halves as 1/2");
  integrate_cmd->add_option("--file", matrix_file, "matrix text file, '-' for stdin");
  integrate_cmd->add_option("--json", matrix_json, "JSON signed matrix, inline or a path");

  auto* z_cmd = app.add_subcommand("z-matrix", "Z = (P1 - P2 - P3 + P4) / 2 of a 2n x 2n permutation");
  std::string perm;
  z_cmd->add_option("--perm", perm, "images of 0..2n-1, comma separated")->required();

  auto* witness_cmd = app.add_subcommand("witness", "signed permutation Q with A = Q B Q^T");
  add_graph_inputs(witness_cmd, in);
  witness_cmd->add_option("--perm", perm, "doubled-vertex map from the second graph onto the first");
  int trials = 0;
  std::uint64_t seed = 0;
  int trial_max_n = 6;
  witness_cmd->add_option("--random-trials", trials, "verify on random switched pairs instead")
      ->check(CLI::NonNegativeNumber);
  witness_cmd->add_option("--seed", seed, "seed for --random-trials");
  witness_cmd->add_option("--max-n", trial_max_n, "largest order for --random-trials")->check(CLI::Range(1, 12));

  auto* census_cmd = app.add_subcommand("census", "class counts for n = 1..max-n");
  int max_n = 4;
  int workers = 1;
  std::string cache_dir;
  bool no_cache = false;
  census_cmd->add_option("--max-n", max_n, "largest n")->check(CLI::PositiveNumber);
  census_cmd->add_option("--workers", workers, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--cache-dir", cache_dir, "cache directory (default $RAINBOWLAB_CACHE_DIR)");
  census_cmd->add_flag("--no-cache", no_cache, "ignore the cache");

  auto* serve_cmd = app.add_subcommand("puzzle-serve", "serve the pebble puzzle JSON API");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("--port", port, "port")->check(CLI::Range(1, 65535));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  Printer p(out, format == "json");
  try {
    if (*psi_cmd) {
      for (const Graph& g : load_graphs(in)) {
        const RainbowWitness w = psi(g);
        p.line(graph6_encode(w.graph) + " colors=" + join(w.coloring.colors, ','));
        Json j = graph_json(w.graph);
        j["coloring"] = to_json(w.coloring);
        p.item(std::move(j));
      }
      p.finish();
    } else if (*extract_cmd) {
      std::optional<std::vector<int>> t;
      if (!transversal.empty()) t = parse_int_list(transversal);
      std::vector<Graph> results;
      for (const RainbowWitness& w : load_witnesses(in, colors)) results.push_back(extract(w, t));
      print_graphs(p, results);
    } else if (*switch_cmd) {
      const std::vector<int> subset = parse_int_list(vertices);
      std::vector<Graph> results;
      for (const Graph& g : load_graphs(in)) results.push_back(switch_subset(g, subset));
      print_graphs(p, results);
    } else if (*equiv_cmd) {
      const std::vector<Graph> graphs = load_graphs(in);
      if (graphs.size() != 2) throw UsageError("switch-equiv takes exactly two graphs");
      const bool equivalent = are_switching_equivalent(graphs[0], graphs[1]);
      p.line(equivalent ? "equivalent" : "not equivalent");
      p.item({{"equivalent", equivalent}});
      p.finish(true);
    } else if (*switch_canon_cmd || *canon_cmd) {
      std::vector<Graph> results;
      for (const Graph& g : load_graphs(in)) {
        results.push_back(*canon_cmd ? canonical_form(g) : switching_canonical_form(g));
      }
      print_graphs(p, results);
    } else if (*color_cmd) {
      for (const Graph& g : load_graphs(in)) {
        const std::optional<Coloring> c = find_rainbow_coloring(g, k);
        p.line(graph6_encode(g) + (c ? " colors=" + join(c->colors, ',') : " none"));
        p.item({{"graph6", graph6_encode(g)}, {"k", k}, {"coloring", c ? to_json(*c) : Json(nullptr)}});
      }
      p.finish();
    } else if (*check_cmd) {
      for (const RainbowWitness& w : load_witnesses(in, colors)) {
        const bool rainbow = is_rainbow_coloring(w.graph, w.coloring);
        p.line(graph6_encode(w.graph) + (rainbow ? " rainbow" : " not rainbow"));
        Json j{{"graph6", graph6_encode(w.graph)}, {"rainbow", rainbow}};
        if (rainbow) {
          const RainbowFacts f = check_rainbow_facts(w.graph, w.coloring);
          j["facts"] = {{"regular", f.regular},
                        {"balanced_classes", f.balanced_classes},
                        {"perfect_matching", f.perfect_matching},
                        {"order_divisible", f.order_divisible}};
        }
        p.item(std::move(j));
      }
      p.finish();
    } else if (*matching_cmd) {
      for (const RainbowWitness& w : load_witnesses(in, colors)) {
        const std::vector<Edge> m = monochromatic_matching(w.graph, w.coloring);
        std::string text = graph6_encode(w.graph);
        Json edges = Json::array();
        for (const auto& [u, v] : m) {
          text += " " + std::to_string(u) + "-" + std::to_string(v);
          edges.push_back({u, v});
        }
        p.line(text);
        p.item({{"graph6", graph6_encode(w.graph)}, {"matching", edges}});
      }
      p.finish();
    } else if (*integrate_cmd) {
      const SignedPermutation t = integrate(SignedHalfPermutation(load_matrix(matrix_text, matrix_file, matrix_json)));
      p.line(format_signed_matrix(t.matrix()));
      p.item(to_json(t.matrix()));
      p.finish(true);
    } else if (*z_cmd) {
      const SignedHalfPermutation z = z_from_permutation(SignedMatrix::permutation(parse_int_list(perm)));
      p.line(format_signed_matrix(z.matrix()));
      p.item(to_json(z.matrix()));
      p.finish(true);
    } else if (*witness_cmd) {
      if (trials > 0) {
        if (!in.g6.empty() || !in.file.empty() || !in.json.empty() || !perm.empty()) {
          throw UsageError("--random-trials takes no graphs");
        }
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(0.5);
        for (int trial = 0; trial < trials; ++trial) {
          const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(trial_max_n));
          Graph g(n);
          for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) g.set_edge(u, v, coin(rng));
          }
          std::vector<int> relabel(n);
          for (int i = 0; i < n; ++i) relabel[i] = i;
          std::shuffle(relabel.begin(), relabel.end(), rng);
          const VertexMask subset = rng() & ((VertexMask{1} << n) - 1);
          const Graph h = switch_subset(g, subset).relabeled(relabel);
          const std::optional<SignedMatrix> pm = doubled_isomorphism(g, h);
          if (!pm) throw InternalCheckFailed("witness: switched pair has no doubled isomorphism");
          checked_witness(g, h, *pm);
        }
        p.line(std::to_string(trials) + " trials verified (seed " + std::to_string(seed) + ")");
        p.item({{"trials", trials}, {"seed", seed}, {"verified", true}});
        p.finish(true);
      } else {
        const std::vector<Graph> graphs = load_graphs(in);
        if (graphs.size() != 2) throw UsageError("witness takes exactly two graphs A and B");
        std::optional<SignedMatrix> pm;
        if (!perm.empty()) {
          pm = SignedMatrix::permutation(parse_int_list(perm));
        } else {
          pm = doubled_isomorphism(graphs[0], graphs[1]);
          if (!pm) throw InvalidArgument("witness: the graphs are not switching equivalent");
        }
        const SignedPermutation q = checked_witness(graphs[0], graphs[1], *pm);
        p.line(format_signed_matrix(q.matrix()));
        p.item(to_json(q.matrix()));
        p.finish(true);
      }
    } else if (*census_cmd) {
      CensusOptions options;
      options.enumeration.workers = workers;
      if (!no_cache) {
        if (cache_dir.empty()) {
          if (const char* env = std::getenv("RAINBOWLAB_CACHE_DIR"); env != nullptr && *env != '\0') cache_dir = env;
        }
        if (!cache_dir.empty()) options.cache_dir = cache_dir;
      }
      const std::vector<CensusRow> rows = census(max_n, options);
      if (p.json()) {
        for (const CensusRow& r : rows) p.item(to_json(r));
        p.finish();
      } else {
        out << census_table(rows);
      }
    } else if (*serve_cmd) {
      err << "serving the puzzle API on http://" << host << ":" << port << '\n';
      if (!serve_puzzle(host, port)) {
        err << "error: cannot listen on " << host << ":" << port << '\n';
        return kExitDomainError;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace rainbowlab::cli
