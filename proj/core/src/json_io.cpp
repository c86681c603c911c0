#include "rainbowlab/json_io.hpp"

#include <string>

#include "rainbowlab/errors.hpp"

namespace rainbowlab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("JSON: missing field '") + key + "'");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("JSON: '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<std::vector<int>> int_rows(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("JSON: '") + key + "' must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& row : v) {
    if (!row.is_array()) throw ParseError(std::string("JSON: rows of '") + key + "' must be arrays");
    std::vector<int>& out = rows.emplace_back();
    for (const Json& x : row) {
      if (!x.is_number_integer()) throw ParseError(std::string("JSON: '") + key + "' entries must be integers");
      out.push_back(x.get<int>());
    }
  }
  return rows;
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("JSON: '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const Json& s : v) {
    if (!s.is_string()) throw ParseError(std::string("JSON: '") + key + "' entries must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

// Domain errors raised while building a value from well-formed JSON are
// still input errors from the caller's point of view.
template <class F>
auto as_parse_error(F&& build) {
  try {
    return build();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  } catch (const CapExceeded& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const auto edges = int_rows(j, "edges");
  return as_parse_error([&] {
    Graph g(n);
    for (const auto& e : edges) {
      if (e.size() != 2) throw ParseError("JSON: every edge must be a pair [u, v]");
      if (e[0] >= e[1]) throw ParseError("JSON: edges must be written [u, v] with u < v");
      if (g.adjacent(e[0], e[1])) throw ParseError("JSON: repeated edge");
      g.set_edge(e[0], e[1]);
    }
    return g;
  });
}

Json to_json(const SeidelMatrix& a) { return {{"n", a.order()}, {"entries", a.rows()}}; }

SeidelMatrix seidel_from_json(const Json& j) {
  const int n = int_field(j, "n");
  auto rows = int_rows(j, "entries");
  if (static_cast<int>(rows.size()) != n) throw ParseError("JSON: 'entries' must have n rows");
  return as_parse_error([&] { return SeidelMatrix(std::move(rows)); });
}

Json to_json(const Coloring& c) { return {{"k", c.k}, {"colors", c.colors}}; }

Coloring coloring_from_json(const Json& j) {
  Coloring c;
  c.k = int_field(j, "k");
  const Json& colors = field(j, "colors");
  if (!colors.is_array()) throw ParseError("JSON: 'colors' must be an array");
  for (const Json& x : colors) {
    if (!x.is_number_integer()) throw ParseError("JSON: colors must be integers");
    c.colors.push_back(x.get<int>());
  }
  as_parse_error([&] {
    check_coloring(c, static_cast<int>(c.colors.size()));
    return 0;
  });
  return c;
}

Json to_json(const RainbowWitness& w) {
  return {{"graph", to_json(w.graph)}, {"coloring", to_json(w.coloring)}};
}

RainbowWitness witness_from_json(const Json& j) {
  RainbowWitness w{graph_from_json(field(j, "graph")), coloring_from_json(field(j, "coloring"))};
  if (static_cast<int>(w.coloring.colors.size()) != w.graph.order()) {
    throw ParseError("JSON: coloring does not cover the graph");
  }
  return w;
}

Json to_json(const SignedMatrix& m) {
  if (!m.within_unit_range()) {
    throw InvalidArgument("signed matrix JSON holds entries in -1..1 only");
  }
  return {{"m", m.order()}, {"doubled_entries", m.doubled_rows()}};
}

SignedMatrix signed_matrix_from_json(const Json& j) {
  const int m = int_field(j, "m");
  const auto rows = int_rows(j, "doubled_entries");
  if (static_cast<int>(rows.size()) != m) throw ParseError("JSON: 'doubled_entries' must have m rows");
  SignedMatrix out = as_parse_error([&] { return SignedMatrix::from_doubled(rows); });
  if (!out.within_unit_range()) throw ParseError("JSON: doubled entries must lie in -2..2");
  return out;
}

Json to_json(const CensusRow& row) {
  return {
      {"n", row.n},
      {"counts",
       {{"graphs", row.graph_classes},
        {"switching", row.switching_classes},
        {"even", row.even_classes},
        {"rainbow", row.rainbow_classes},
        {"regular", row.regular_graphs}}},
      {"representatives",
       {{"switching", row.switching_representatives},
        {"even", row.even_representatives},
        {"rainbow", row.rainbow_representatives}}},
  };
}

CensusRow census_row_from_json(const Json& j) {
  CensusRow row;
  row.n = int_field(j, "n");
  const Json& counts = field(j, "counts");
  row.graph_classes = static_cast<std::size_t>(int_field(counts, "graphs"));
  row.switching_classes = static_cast<std::size_t>(int_field(counts, "switching"));
  row.even_classes = static_cast<std::size_t>(int_field(counts, "even"));
  row.rainbow_classes = static_cast<std::size_t>(int_field(counts, "rainbow"));
  row.regular_graphs = static_cast<std::size_t>(int_field(counts, "regular"));
  const Json& reps = field(j, "representatives");
  row.switching_representatives = string_list(reps, "switching");
  row.even_representatives = string_list(reps, "even");
  row.rainbow_representatives = string_list(reps, "rainbow");
  return row;
}

}  // namespace rainbowlab
