#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "letgrid/graph.hpp"

namespace letgrid {

// One-line notation; values()[i-1] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(v_.size()); }
  int operator()(int i) const { return v_.at(i - 1); }
  const std::vector<int>& values() const { return v_; }

  Permutation inverse() const;
  Permutation reverse() const;
  Permutation complement() const;
  int inversions() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> v_;
};

enum class SumMode { direct, skew };

bool order_isomorphic(const std::vector<int>& a, const std::vector<int>& b);
// Lexicographically least increasing 1-based index sequence realising sigma.
std::optional<std::vector<int>> contains_pattern(const Permutation& pi, const Permutation& sigma);
Permutation sum(const Permutation& pi, const Permutation& sigma, SumMode mode);
Graph inversion_graph(const Permutation& pi);
Permutation pi_n(int n);
// Pattern order-isomorphic to a sequence of distinct values.
Permutation standardize(const std::vector<int>& values);
// All permutations of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

}  // namespace letgrid
