#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "letgrid/budget.hpp"

namespace letgrid {

// Sorted list of 1-based vertex labels.
using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

// Finite simple graph on vertices 1..n, stored as adjacency bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const;

  bool adjacent(int u, int v) const {
    check(u);
    check(v);
    return test(u - 1, v - 1);
  }
  void add_edge(int u, int v) { set_edge(u, v, true); }
  void remove_edge(int u, int v) { set_edge(u, v, false); }
  void set_edge(int u, int v, bool on);

  int degree(int v) const;
  std::vector<int> neighbours(int v) const;
  std::vector<Edge> edges() const;

  // Neighbourhood of v as a bit mask over 0-based labels; requires n <= 64.
  std::uint64_t mask(int v) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  void check(int v) const;
  bool test(int a, int b) const { return (bits_[a * words_ + b / 64] >> (b % 64)) & 1U; }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class GraphFamily { complete, path, cycle, matching, edgeless };

Graph generate(GraphFamily family, int n);
std::optional<GraphFamily> family_from_name(std::string_view name);

Graph induced_subgraph(const Graph& g, const VertexSet& u);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
// New vertex i is old vertex order[i-1]; order must be a permutation of 1..n.
Graph relabel(const Graph& g, const std::vector<int>& order);

bool is_homogeneous(const Graph& g, const VertexSet& u);
bool is_chain_pair(const Graph& g, const VertexSet& a, const VertexSet& b);

// Least number of cliques and independent sets covering V (exact, n <= 20).
int cochromatic_number(const Graph& g);

// Vertex order realising the minimum adjacency string; intended for n <= 12.
std::vector<int> canonical_order(const Graph& g);
std::string canonical_key(const Graph& g);
Graph canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);
// Some bijection m with m[v-1] in b for each v in a, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

// Lexicographically least vertex set of host inducing a copy of pattern.
std::optional<VertexSet> contains_induced(const Graph& host, const Graph& pattern, Budget budget = {});

// One representative (in canonical form) per isomorphism class of order n.
std::vector<Graph> enumerate_graphs(int n);

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
std::string to_dot(const Graph& g, std::string_view name = "G");

// Shared tokenizer for the line-oriented text formats.
std::vector<std::vector<std::string>> tokenize_lines(std::string_view text);
int parse_int(const std::string& token, std::string_view what);

}  // namespace letgrid
