#pragma once

#include <vector>

#include "rainbowlab/graph.hpp"

namespace rainbowlab {

// Symmetric matrix with zero diagonal and +-1 elsewhere.
//
// Sign convention: +1 marks an EDGE and -1 a non-edge. This is the reverse
// of the classical Seidel convention; every block identity used by the
// bijection code (the doubled matrix [A, I-A; I-A, A] in particular) is
// written in this convention.
class SeidelMatrix {
 public:
  SeidelMatrix() = default;

  // Validates symmetry, zero diagonal and off-diagonal values in {-1, +1};
  // throws InvalidArgument otherwise.
  explicit SeidelMatrix(std::vector<std::vector<int>> rows);

  int order() const { return n_; }
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const SeidelMatrix&, const SeidelMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

SeidelMatrix seidel_of_graph(const Graph& g);
Graph graph_of_seidel(const SeidelMatrix& a);

}  // namespace rainbowlab
