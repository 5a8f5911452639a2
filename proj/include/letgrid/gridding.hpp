#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "letgrid/graph.hpp"
#include "letgrid/letters.hpp"
#include "letgrid/permutation.hpp"

namespace letgrid {

// s columns counted left to right, t rows counted bottom to top; entries in {-1, 0, 1}.
class GridMatrix {
 public:
  GridMatrix() = default;
  GridMatrix(int s, int t);

  int columns() const { return s_; }
  int rows() const { return t_; }
  int at(int i, int j) const { return a_[index(i, j)]; }
  void set(int i, int j, int value);

  bool operator==(const GridMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const;

  int s_ = 0, t_ = 0;
  std::vector<int> a_;
};

using Cell = std::pair<int, int>;  // (column, row)
using CellWord = std::vector<Cell>;

struct SignVector {
  std::vector<int> columns;
  std::vector<int> rows;
  bool operator==(const SignVector&) const = default;
};

// Interior cut lines. A value g places the line at x = g + 1/2 (after the
// first g points); equal values stand for distinct lines in the same gap.
struct Gridding {
  std::vector<int> vertical;
  std::vector<int> horizontal;
  std::vector<Cell> assignment;  // cell of the point at position i (index i-1)
};

enum class GridMode { grid, geom };

// Non-zero entries ordered by column, then row; these are the cell letters.
std::vector<Cell> nonzero_cells(const GridMatrix& m);
Graph cell_graph(const GridMatrix& m);
std::optional<SignVector> find_pmm_signs(const GridMatrix& m);
bool realizes(const GridMatrix& m, const SignVector& signs);
GridMatrix refine(const GridMatrix& m, int k);

bool is_monotone_gridding(const Permutation& pi, const GridMatrix& m, const std::vector<int>& vertical,
                          const std::vector<int>& horizontal);
// Cuts are enumerated lexicographically, vertical first; returns the first hit.
std::optional<Gridding> monotone_gridding(const Permutation& pi, const GridMatrix& m);
// Visits every monotone gridding until the visitor returns true.
void for_each_monotone_gridding(const Permutation& pi, const GridMatrix& m,
                                const std::function<bool(const Gridding&)>& visit);

struct GeometricResult {
  GridMatrix matrix;  // m itself, or its 2-refinement when m is not a PMM
  SignVector signs;
  CellWord word;      // lexicographically least word with phi(word) = pi
};

std::optional<GeometricResult> geometric_gridding(const Permutation& pi, const GridMatrix& m);
Permutation phi(const GridMatrix& m, const SignVector& signs, const CellWord& w);
Decoder decoder_from_pmm(const GridMatrix& m, const SignVector& signs);
std::vector<Permutation> enumerate_class(const GridMatrix& m, int n, GridMode mode);

std::string cell_token(const GridMatrix& m, const Cell& c);
CellWord parse_cell_word(const GridMatrix& m, std::string_view text);
std::string format_cell_word(const GridMatrix& m, const CellWord& w);
Word to_word(const GridMatrix& m, const CellWord& w);

GridMatrix parse_matrix(std::string_view text);
std::string format_matrix(const GridMatrix& m);
std::string format_cut(int gap);

}  // namespace letgrid
