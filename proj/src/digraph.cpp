#include "fp/digraph.hpp"

#include <algorithm>

namespace fp {

Digraph support_digraph(const Mat& m) {
  Digraph g(m.rows);
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++)
      if (!m.at(i, j).is_zero()) g.adj[i].push_back(j);
  return g;
}

namespace {

struct Tarjan {
  const Digraph& g;
  std::vector<int> index, lowlink, stack;
  std::vector<bool> on_stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  explicit Tarjan(const Digraph& g_)
      : g(g_), index(g_.n, -1), lowlink(g_.n, 0), on_stack(g_.n, false) {}

  void visit(int v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : g.adj[v]) {
      if (index[w] < 0) {
        visit(w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  }
};

}  // namespace

// Tarjan pops a component only after everything it reaches is popped, so the
// emission order is already reverse topological.
std::vector<std::vector<int>> scc_decompose(const Digraph& g) {
  Tarjan t(g);
  for (int v = 0; v < g.n; v++)
    if (t.index[v] < 0) t.visit(v);
  return t.comps;
}

bool reaches(const Digraph& g, int from, int to) {
  std::vector<bool> seen(g.n, false);
  std::vector<int> work{from};
  seen[from] = true;
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    if (v == to) return true;
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = true;
        work.push_back(w);
      }
  }
  return false;
}

}  // namespace fp
