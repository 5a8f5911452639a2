#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace letgrid {

// Directed graph on nodes 1..n without parallel arcs; loops are rejected.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n), out_(n + 1), has_(static_cast<std::size_t>(n + 1) * (n + 1), 0) {}

  int order() const { return n_; }
  void add_arc(int u, int v);
  bool has_arc(int u, int v) const { return has_[index(u, v)]; }
  const std::vector<int>& out(int u) const { return out_[u]; }
  std::vector<std::pair<int, int>> arcs() const;
  int arc_count() const;

 private:
  std::size_t index(int u, int v) const;

  int n_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<char> has_;
};

// Lexicographically least topological order (smallest available node first),
// or nullopt when the digraph has a cycle.
std::optional<std::vector<int>> topological_order(const Digraph& d);
// Same, but ties are broken by ascending rank[v] instead of node label.
std::optional<std::vector<int>> topological_order(const Digraph& d, const std::vector<int>& rank);
// A directed cycle v1 -> v2 -> ... -> vk -> v1 listed without repeating v1, if any.
std::optional<std::vector<int>> find_cycle(const Digraph& d);

}  // namespace letgrid
