#pragma once

#include <nlohmann/json.hpp>

#include "rainbowlab/bijection.hpp"
#include "rainbowlab/enumeration.hpp"
#include "rainbowlab/graph.hpp"
#include "rainbowlab/seidel.hpp"
#include "rainbowlab/signed_matrix.hpp"

// JSON wire forms. Every *_from_json throws ParseError on malformed input.
//
//   graph          {"n": int, "edges": [[u, v], ...]}     0-based, u < v
//   seidel         {"n": int, "entries": [[int, ...], ...]}
//   coloring       {"k": int, "colors": [int, ...]}
//   witness        {"graph": graph, "coloring": coloring}
//   signed matrix  {"m": int, "doubled_entries": [[int, ...], ...]}  values in -2..2
//   census row     {"n": int, "counts": {...}, "representatives":
//                   {"switching": [g6...], "even": [g6...], "rainbow": [g6...]}}
namespace rainbowlab {

using Json = nlohmann::json;

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const SeidelMatrix& a);
SeidelMatrix seidel_from_json(const Json& j);

Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json to_json(const RainbowWitness& w);
RainbowWitness witness_from_json(const Json& j);

// Throws InvalidArgument for entries outside -1..1.
Json to_json(const SignedMatrix& m);
SignedMatrix signed_matrix_from_json(const Json& j);

Json to_json(const CensusRow& row);
CensusRow census_row_from_json(const Json& j);

}  // namespace rainbowlab
