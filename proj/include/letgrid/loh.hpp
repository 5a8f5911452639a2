#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "letgrid/budget.hpp"
#include "letgrid/chain_circuit.hpp"
#include "letgrid/digraph.hpp"

namespace letgrid {

// Members are element indices (1-based) in hyperedge order.
struct Hyperedge {
  std::string name;
  std::vector<int> members;
};

// Locally ordered hypergraph. Build through validate_loh.
class Loh {
 public:
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(int x) const { return elements_.at(x - 1); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  // Index of a named element, or 0.
  int find(std::string_view name) const;

  friend Loh validate_loh(std::vector<std::string> elements, std::vector<Hyperedge> edges);

 private:
  std::vector<std::string> elements_;
  std::vector<Hyperedge> edges_;
};

// Throws InputError on isolated elements, repeated members, or two hyperedges
// ordering a shared cell differently.
Loh validate_loh(std::vector<std::string> elements, std::vector<Hyperedge> edges);

// Classes of elements lying in exactly the same hyperedges, by first element.
std::vector<VertexSet> cells(const Loh& h);
Digraph conflict(const Loh& h);

struct ConsistencyResult {
  std::optional<std::vector<int>> order;  // linear extension of every hyperedge order
  std::vector<int> cycle;                 // conflict cycle otherwise
};
ConsistencyResult is_globally_consistent(const Loh& h);

// Removes x and cuts each hyperedge through x into its parts below and above x.
Loh split(const Loh& h, int x);

struct InconsistencyResult {
  int value = 0;      // exact minimum, or a lower bound when !exact
  bool exact = true;
};
// Breadth-first over split sets; levels deeper than max_depth are not explored.
InconsistencyResult global_inconsistency(const Loh& h, int max_depth = -1, Budget budget = {});

// One hyperedge per consecutive bag pair, ordered by the pair's conflict arcs
// together with the bag orders.
Loh from_chain_circuit(const ChainCircuit& cc);

// Random hyperedges over m elements with orders that agree on every cell.
Loh random_loh(int m, int edge_count, std::mt19937_64& rng);

Loh parse_loh(std::string_view text);
std::string format_loh(const Loh& h);

}  // namespace letgrid
