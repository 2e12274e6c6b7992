#pragma once

#include <vector>

#include "fp/matrix.hpp"

namespace fp {

struct Digraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  explicit Digraph(int n_ = 0) : n(n_), adj(n_) {}
};

// edge i -> j wherever the entry (i, j) is nonzero (infinite counts)
Digraph support_digraph(const Mat& m);

// strongly connected components, emitted in reverse topological order of the
// condensation: a component precedes everything that can reach it
std::vector<std::vector<int>> scc_decompose(const Digraph& g);

bool reaches(const Digraph& g, int from, int to);

}  // namespace fp
