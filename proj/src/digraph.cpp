#include "letgrid/digraph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "letgrid/budget.hpp"

namespace letgrid {

std::size_t Digraph::index(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw InputError("arc endpoint out of range");
  return static_cast<std::size_t>(u) * (n_ + 1) + v;
}

void Digraph::add_arc(int u, int v) {
  if (u == v) throw InputError("loop at node " + std::to_string(u));
  auto i = index(u, v);
  if (has_[i]) return;
  has_[i] = 1;
  out_[u].push_back(v);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (int v : out_[u]) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

int Digraph::arc_count() const {
  int c = 0;
  for (int u = 1; u <= n_; ++u) c += static_cast<int>(out_[u].size());
  return c;
}

std::optional<std::vector<int>> topological_order(const Digraph& d, const std::vector<int>& rank) {
  int n = d.order();
  std::vector<int> indeg(n + 1, 0);
  for (int u = 1; u <= n; ++u)
    for (int v : d.out(u)) ++indeg[v];
  using Item = std::pair<int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) ready.emplace(rank[v], v);
  std::vector<int> order;
  while (!ready.empty()) {
    int u = ready.top().second;
    ready.pop();
    order.push_back(u);
    for (int v : d.out(u))
      if (--indeg[v] == 0) ready.emplace(rank[v], v);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

std::optional<std::vector<int>> topological_order(const Digraph& d) {
  std::vector<int> rank(d.order() + 1);
  for (int v = 0; v <= d.order(); ++v) rank[v] = v;
  return topological_order(d, rank);
}

std::optional<std::vector<int>> find_cycle(const Digraph& d) {
  int n = d.order();
  std::vector<int> state(n + 1, 0), parent(n + 1, 0);
  // Iterative DFS; state 1 = on stack, 2 = finished.
  for (int root = 1; root <= n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < d.out(u).size()) {
        int v = d.out(u)[next++];
        if (state[v] == 1) {
          std::vector<int> cycle{v};
          for (int w = u; w != v; w = parent[w]) cycle.push_back(w);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
        if (state[v] == 0) {
          state[v] = 1;
          parent[v] = u;
          stack.emplace_back(v, 0);
        }
      } else {
        state[u] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

}  // namespace letgrid
