#include "rainbowlab/seidel.hpp"

#include <string>

#include "rainbowlab/errors.hpp"

namespace rainbowlab {

SeidelMatrix::SeidelMatrix(std::vector<std::vector<int>> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > Graph::kMaxVertices) {
    throw CapExceeded("Seidel matrix order " + std::to_string(n) + " too large");
  }
  n_ = n;
  entries_.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InvalidArgument("Seidel matrix row " + std::to_string(i) + " has wrong length");
    }
    for (int j = 0; j < n; ++j) {
      const int a = rows[i][j];
      if (i == j && a != 0) {
        throw InvalidArgument("Seidel matrix diagonal entry " + std::to_string(i) + " is nonzero");
      }
      if (i != j && a != 1 && a != -1) {
        throw InvalidArgument("Seidel matrix entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") is not +-1");
      }
      if (a != rows[j][i]) {
        throw InvalidArgument("Seidel matrix is not symmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
      entries_.push_back(a);
    }
  }
}

std::vector<std::vector<int>> SeidelMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
  }
  return out;
}

SeidelMatrix seidel_of_graph(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) rows[i][j] = g.adjacent(i, j) ? 1 : -1;
    }
  }
  return SeidelMatrix(std::move(rows));
}

Graph graph_of_seidel(const SeidelMatrix& a) {
  Graph g(a.order());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = i + 1; j < a.order(); ++j) {
      if (a.at(i, j) == 1) g.set_edge(i, j);
    }
  }
  return g;
}

}  // namespace rainbowlab
