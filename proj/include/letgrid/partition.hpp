#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "letgrid/budget.hpp"
#include "letgrid/graph.hpp"
#include "letgrid/permutation.hpp"

namespace letgrid {

enum class PartitionLevel { chain, semi, proper };

// Ordered bags covering V. A sign (a, b, +1) declares that bag a's order is
// increasing in neighbourhoods toward bag b (-1: decreasing). Bag indices are 0-based.
struct PartitionCertificate {
  std::vector<std::string> names;
  std::vector<std::vector<int>> bags;
  std::vector<std::tuple<int, int, int>> signs;
};

struct PartitionCheck {
  bool ok = true;
  int bag_a = -1, bag_b = -1;  // failing bag (and pair partner), when not ok
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Throws InputError when the bags do not partition V.
PartitionCheck check_partition(const Graph& g, const PartitionCertificate& cert, PartitionLevel level);

// Orders and signs for fixed bag contents making the partition pass `level`,
// or nullopt. Existing bag orders are ignored.
std::optional<PartitionCertificate> order_bags(const Graph& g, const std::vector<std::vector<int>>& bags,
                                               PartitionLevel level);

inline constexpr int kGammaDeskBound = 12;
inline constexpr int kSigmaDeskBound = 10;

// Least bag count at the given level, with an optimal certificate.
struct ParameterResult {
  int value = 0;
  PartitionCertificate witness;
};
ParameterResult chain_parameter(const Graph& g, PartitionLevel level, Budget budget = {});
int gamma(const Graph& g, Budget budget = {});
int sigma(const Graph& g, Budget budget = {});
int lambda(const Graph& g, Budget budget = {});

// x_i = i, y_j = n + j, z_c = 2n + c.
struct LinkedChainGraph {
  int n = 0;
  Graph graph;
  VertexSet a, b, c;
  Permutation pi;
};
LinkedChainGraph linked_chain(const Permutation& pi);
bool check_canonical_semi(const LinkedChainGraph& lcg);
bool pattern_monotone_containment(const Permutation& pi, const LinkedChainGraph& sub);

// colour[x-1][y-1] is the colour of (x, y).
struct Colouring {
  int n = 0;
  int k = 0;
  std::vector<std::vector<std::string>> colour;
};
struct ApGridWitness {
  std::vector<int> x, y;
  std::string colour;
};
// First pair of length-k progressions (ordered by start, then difference, X before Y).
std::optional<ApGridWitness> ap_grid_search(const Colouring& c, int k);

PartitionCertificate parse_certificate(std::string_view text);
std::string format_certificate(const PartitionCertificate& cert);
Colouring parse_colouring(std::string_view text);

}  // namespace letgrid
