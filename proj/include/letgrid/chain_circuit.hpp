#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "letgrid/budget.hpp"
#include "letgrid/digraph.hpp"
#include "letgrid/graph.hpp"
#include "letgrid/letters.hpp"

namespace letgrid {

enum class CircuitViolation { too_few_bags, cover, independence, stray_edge, chain_pair, order };

class CircuitError : public InputError {
 public:
  CircuitError(CircuitViolation v, const std::string& what) : InputError(what), violation_(v) {}
  CircuitViolation violation() const { return violation_; }

 private:
  CircuitViolation violation_;
};

// Graph with bags A_1..A_k (0-based here), each an ordered vertex list. Bags
// may be empty, which happens for the parts produced by red_blue_split.
class ChainCircuit {
 public:
  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<int>>& bags() const { return bags_; }
  int k() const { return static_cast<int>(bags_.size()); }
  int order() const { return graph_.order(); }
  int bag_of(int v) const { return bag_[v]; }
  int position(int v) const { return pos_[v]; }
  int next(int i) const { return (i + 1) % k(); }
  int prev(int i) const { return (i + k() - 1) % k(); }

  friend ChainCircuit validate_circuit(Graph g, std::vector<std::vector<int>> bags);

 private:
  Graph graph_;
  std::vector<std::vector<int>> bags_;
  std::vector<int> bag_, pos_;
};

// Checks the three defining conditions; throws CircuitError naming the first failure.
ChainCircuit validate_circuit(Graph g, std::vector<std::vector<int>> bags);

// Part of a circuit relabelled 1..m; original[v-1] is the label in the parent.
struct SubCircuit {
  ChainCircuit circuit;
  std::vector<int> original;
};

ChainCircuit generate_ckl(int k, int l);
// Vertex v_{i,m} of C_{k,l} (1-based i and m).
int ckl_vertex(int l, int i, int m);
ChainCircuit cc_complement(const ChainCircuit& cc);
Digraph conflict(const ChainCircuit& cc);

struct Encoding {
  Decoder decoder;
  Word word;
  std::vector<int> vertices;  // circuit vertex at each word position
  int letters_used = 0;
  int letter_budget = 0;
  int fallbacks = 0;          // middle parts that needed one letter per vertex
};

struct CyclicWordResult {
  std::optional<Encoding> encoding;
  std::vector<int> cycle;  // directed conflict cycle when no encoding exists
};

CyclicWordResult cyclic_word(const ChainCircuit& cc);

// Bag-respecting copy of C_{k,p}: layers[j][i] lies in bag i, layer positions
// strictly increase with j. Lexicographically least by bag positions.
std::optional<std::vector<std::vector<int>>> find_cycle_layers(const ChainCircuit& cc, int p, Budget budget = {});
std::optional<std::vector<std::vector<int>>> find_cycle_layers(const ChainCircuit& cc, int p, StepCounter& steps);
std::optional<VertexSet> find_cycle_subgraph(const ChainCircuit& cc, int p, Budget budget = {});
bool has_anticycle(const ChainCircuit& cc, Budget budget = {});

struct RedBlueSplit {
  SubCircuit left, middle, right;
  std::vector<int> blue, red;  // one vertex per bag, bag order
};

// Leftmost-neighbour cycle reached from the seed's vertex in the last bag.
// The red cycle is the rightmost-neighbour cycle reached from blue's last-bag vertex.
std::vector<int> blue_cycle(const ChainCircuit& cc, const VertexSet& seed);
RedBlueSplit red_blue_split(const ChainCircuit& cc, const VertexSet& seed);
// The complete/empty adjacency pattern between the three parts.
bool cross_structure_holds(const ChainCircuit& cc, const RedBlueSplit& split);

Encoding encode(const ChainCircuit& cc, Budget budget = {});
// decode(e.decoder, e.word) equals g after renaming position p to e.vertices[p-1].
bool encoding_matches(const Graph& g, const Encoding& e);

// Cycle of k chain graphs whose pair (bags 2, 3) has one side reversed.
struct TwistedCircuit {
  Graph graph;
  std::vector<std::vector<int>> bags;
  // (bag, other bag, +1/-1), 0-based: declared monotonicity of bag's order toward other.
  std::vector<std::tuple<int, int, int>> signs;
};
TwistedCircuit generate_twisted(int k, int l);

// Uniform thresholds per consecutive pair, then a random relabelling.
ChainCircuit random_circuit(int k, int n, std::mt19937_64& rng);

ChainCircuit parse_circuit(std::string_view text);
std::string format_circuit(const ChainCircuit& cc);
std::string format_encoding(const Encoding& e);

}  // namespace letgrid
