#include "letgrid/gridding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "letgrid/digraph.hpp"

namespace letgrid {

GridMatrix::GridMatrix(int s, int t) : s_(s), t_(t) {
  if (s < 0 || t < 0) throw InputError("matrix dimensions must be non-negative");
  a_.assign(static_cast<std::size_t>(s) * t, 0);
}

std::size_t GridMatrix::index(int i, int j) const {
  if (i < 1 || i > s_ || j < 1 || j > t_)
    throw InputError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  return static_cast<std::size_t>(j - 1) * s_ + (i - 1);
}

void GridMatrix::set(int i, int j, int value) {
  if (value < -1 || value > 1) throw InputError("matrix entries must be -1, 0 or 1");
  a_[index(i, j)] = value;
}

std::vector<Cell> nonzero_cells(const GridMatrix& m) {
  std::vector<Cell> out;
  for (int i = 1; i <= m.columns(); ++i)
    for (int j = 1; j <= m.rows(); ++j)
      if (m.at(i, j) != 0) out.emplace_back(i, j);
  return out;
}

Graph cell_graph(const GridMatrix& m) {
  auto cells = nonzero_cells(m);
  Graph g(static_cast<int>(cells.size()));
  auto id = [&](int i, int j) {
    return static_cast<int>(std::find(cells.begin(), cells.end(), Cell{i, j}) - cells.begin()) + 1;
  };
  // Consecutive non-zero entries along each row and each column.
  for (int j = 1; j <= m.rows(); ++j) {
    int prev = 0;
    for (int i = 1; i <= m.columns(); ++i)
      if (m.at(i, j) != 0) {
        if (prev) g.add_edge(id(prev, j), id(i, j));
        prev = i;
      }
  }
  for (int i = 1; i <= m.columns(); ++i) {
    int prev = 0;
    for (int j = 1; j <= m.rows(); ++j)
      if (m.at(i, j) != 0) {
        if (prev) g.add_edge(id(i, prev), id(i, j));
        prev = j;
      }
  }
  return g;
}

bool realizes(const GridMatrix& m, const SignVector& signs) {
  if (static_cast<int>(signs.columns.size()) != m.columns() || static_cast<int>(signs.rows.size()) != m.rows()) return false;
  for (int c : signs.columns)
    if (c != 1 && c != -1) return false;
  for (int r : signs.rows)
    if (r != 1 && r != -1) return false;
  for (auto [i, j] : nonzero_cells(m))
    if (m.at(i, j) != signs.columns[i - 1] * signs.rows[j - 1]) return false;
  return true;
}

std::optional<SignVector> find_pmm_signs(const GridMatrix& m) {
  int s = m.columns(), t = m.rows();
  // Nodes 0..s-1 are columns, s..s+t-1 rows; each non-zero entry links its
  // column and row and fixes the product of their signs.
  std::vector<int> sign(s + t, 0);
  for (int seed = 0; seed < s + t; ++seed) {
    if (sign[seed]) continue;
    sign[seed] = 1;
    std::queue<int> q;
    q.push(seed);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (u < s) {
        for (int j = 1; j <= t; ++j) {
          int a = m.at(u + 1, j);
          if (!a) continue;
          int want = a * sign[u];
          int& r = sign[s + j - 1];
          if (!r) {
            r = want;
            q.push(s + j - 1);
          } else if (r != want) {
            return std::nullopt;
          }
        }
      } else {
        for (int i = 1; i <= s; ++i) {
          int a = m.at(i, u - s + 1);
          if (!a) continue;
          int want = a * sign[u];
          int& c = sign[i - 1];
          if (!c) {
            c = want;
            q.push(i - 1);
          } else if (c != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return SignVector{std::vector<int>(sign.begin(), sign.begin() + s), std::vector<int>(sign.begin() + s, sign.end())};
}

GridMatrix refine(const GridMatrix& m, int k) {
  if (k < 1) throw InputError("refinement factor must be at least 1");
  GridMatrix r(m.columns() * k, m.rows() * k);
  for (auto [i, j] : nonzero_cells(m))
    for (int a = 1; a <= k; ++a) {
      if (m.at(i, j) == 1)
        r.set((i - 1) * k + a, (j - 1) * k + a, 1);
      else
        r.set((i - 1) * k + a, (j - 1) * k + (k + 1 - a), -1);
    }
  return r;
}

namespace {

int band(const std::vector<int>& cuts, int coordinate) {
  int b = 1;
  for (int g : cuts) b += g < coordinate;
  return b;
}

bool cell_ok(int entry, const std::vector<int>& values) {
  if (values.empty()) return true;
  if (entry == 0) return false;
  for (std::size_t i = 1; i < values.size(); ++i)
    if ((entry == 1) != (values[i - 1] < values[i])) return false;
  return true;
}

// Cells of one row, given the value band (lo, hi] it covers.
bool row_ok(const Permutation& pi, const GridMatrix& m, const std::vector<int>& vertical, int lo, int hi, int row) {
  std::vector<std::vector<int>> cols(m.columns() + 1);
  for (int x = 1; x <= pi.size(); ++x) {
    int y = pi(x);
    if (y > lo && y <= hi) cols[band(vertical, x)].push_back(y);
  }
  for (int i = 1; i <= m.columns(); ++i)
    if (!cell_ok(m.at(i, row), cols[i])) return false;
  return true;
}

bool cuts_rec(int n, int count, std::vector<int>& cur, const std::function<bool(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == count) return visit(cur);
  int from = cur.empty() ? 0 : cur.back();
  for (int g = from; g <= n; ++g) {
    cur.push_back(g);
    if (cuts_rec(n, count, cur, visit)) return true;
    cur.pop_back();
  }
  return false;
}

bool horizontal_rec(const Permutation& pi, const GridMatrix& m, const std::vector<int>& vertical,
                    std::vector<int>& horizontal, const std::function<bool(const Gridding&)>& visit) {
  int n = pi.size();
  int row = static_cast<int>(horizontal.size()) + 1;
  int lo = horizontal.empty() ? 0 : horizontal.back();
  if (row == m.rows()) {
    if (!row_ok(pi, m, vertical, lo, n, row)) return false;
    Gridding gr{vertical, horizontal, {}};
    for (int x = 1; x <= n; ++x) gr.assignment.emplace_back(band(vertical, x), band(horizontal, pi(x)));
    return visit(gr);
  }
  for (int g = lo; g <= n; ++g) {
    if (!row_ok(pi, m, vertical, lo, g, row)) continue;
    horizontal.push_back(g);
    if (horizontal_rec(pi, m, vertical, horizontal, visit)) return true;
    horizontal.pop_back();
  }
  return false;
}

}  // namespace

bool is_monotone_gridding(const Permutation& pi, const GridMatrix& m, const std::vector<int>& vertical,
                          const std::vector<int>& horizontal) {
  int n = pi.size();
  if (static_cast<int>(vertical.size()) != m.columns() - 1 || static_cast<int>(horizontal.size()) != m.rows() - 1) return false;
  if (!std::is_sorted(vertical.begin(), vertical.end()) || !std::is_sorted(horizontal.begin(), horizontal.end())) return false;
  for (int g : vertical)
    if (g < 0 || g > n) return false;
  for (int g : horizontal)
    if (g < 0 || g > n) return false;
  for (int row = 1; row <= m.rows(); ++row) {
    int lo = row == 1 ? 0 : horizontal[row - 2];
    int hi = row == m.rows() ? n : horizontal[row - 1];
    if (!row_ok(pi, m, vertical, lo, hi, row)) return false;
  }
  return true;
}

void for_each_monotone_gridding(const Permutation& pi, const GridMatrix& m,
                                const std::function<bool(const Gridding&)>& visit) {
  if (m.columns() < 1 || m.rows() < 1) throw InputError("matrix must have at least one row and one column");
  std::vector<int> vertical;
  cuts_rec(pi.size(), m.columns() - 1, vertical, [&](const std::vector<int>& v) {
    std::vector<int> horizontal;
    return horizontal_rec(pi, m, v, horizontal, visit);
  });
}

std::optional<Gridding> monotone_gridding(const Permutation& pi, const GridMatrix& m) {
  std::optional<Gridding> found;
  for_each_monotone_gridding(pi, m, [&](const Gridding& g) {
    found = g;
    return true;
  });
  return found;
}

Permutation phi(const GridMatrix& m, const SignVector& signs, const CellWord& w) {
  if (!realizes(m, signs)) throw InputError("phi needs a partial multiplication matrix and matching signs");
  long scale = static_cast<long>(w.size()) + 1;
  std::vector<std::pair<long, long>> pts;
  for (std::size_t p = 0; p < w.size(); ++p) {
    auto [k, l] = w[p];
    if (k < 1 || k > m.columns() || l < 1 || l > m.rows() || m.at(k, l) == 0)
      throw InputError("cell letter names a zero entry");
    long d = static_cast<long>(p) + 1;
    long x = (k - 1) * scale + (signs.columns[k - 1] == 1 ? d : scale - d);
    long y = (l - 1) * scale + (signs.rows[l - 1] == 1 ? d : scale - d);
    pts.emplace_back(x, y);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<int> ys;
  for (auto& pt : pts) ys.push_back(static_cast<int>(pt.second));
  return standardize(ys);
}

namespace {

// Order in which distances must increase inside each column and row; its
// topological orders are exactly the cell words mapping to pi under phi.
Digraph distance_order(const Permutation& pi, const Gridding& gr, const SignVector& signs) {
  int n = pi.size();
  Digraph d(n);
  auto inv = pi.inverse();
  for (int x = 1; x <= n; ++x)
    for (int x2 = x + 1; x2 <= n; ++x2)
      if (gr.assignment[x - 1].first == gr.assignment[x2 - 1].first) {
        if (signs.columns[gr.assignment[x - 1].first - 1] == 1)
          d.add_arc(x, x2);
        else
          d.add_arc(x2, x);
        break;
      }
  for (int y = 1; y <= n; ++y) {
    int p = inv(y);
    for (int y2 = y + 1; y2 <= n; ++y2) {
      int q = inv(y2);
      if (gr.assignment[p - 1].second == gr.assignment[q - 1].second) {
        if (signs.rows[gr.assignment[p - 1].second - 1] == 1)
          d.add_arc(p, q);
        else
          d.add_arc(q, p);
        break;
      }
    }
  }
  return d;
}

int letter_rank(const GridMatrix& m, const Cell& c) { return (c.first - 1) * m.rows() + (c.second - 1); }

}  // namespace

std::optional<GeometricResult> geometric_gridding(const Permutation& pi, const GridMatrix& m) {
  GeometricResult res;
  auto signs = find_pmm_signs(m);
  res.matrix = signs ? m : refine(m, 2);
  if (!signs) signs = find_pmm_signs(res.matrix);
  if (!signs) throw std::logic_error("2-refinement is not a partial multiplication matrix");
  res.signs = *signs;
  std::optional<std::vector<int>> best;
  for_each_monotone_gridding(pi, res.matrix, [&](const Gridding& gr) {
    Digraph d = distance_order(pi, gr, res.signs);
    std::vector<int> rank(pi.size() + 1, 0);
    for (int x = 1; x <= pi.size(); ++x) rank[x] = letter_rank(res.matrix, gr.assignment[x - 1]);
    auto order = topological_order(d, rank);
    if (!order) return false;
    std::vector<int> letters;
    for (int x : *order) letters.push_back(rank[x]);
    if (!best || letters < *best) {
      best = letters;
      res.word.clear();
      for (int x : *order) res.word.push_back(gr.assignment[x - 1]);
    }
    return false;
  });
  if (!best) return std::nullopt;
  if (phi(res.matrix, res.signs, res.word) != pi) throw std::logic_error("geometric gridding word does not map back to the permutation");
  return res;
}

Decoder decoder_from_pmm(const GridMatrix& m, const SignVector& signs) {
  if (!realizes(m, signs)) throw InputError("decoder construction needs a partial multiplication matrix and matching signs");
  auto cells = nonzero_cells(m);
  std::vector<std::string> names;
  for (const auto& c : cells) names.push_back(cell_token(m, c));
  Decoder d(names);
  // An earlier point (smaller distance) in cell a and a later one in cell b
  // are inverted when their x and y comparisons disagree.
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b) {
      auto [ka, la] = cells[a];
      auto [kb, lb] = cells[b];
      int dx = ka != kb ? (kb > ka ? 1 : -1) : signs.columns[ka - 1];
      int dy = la != lb ? (lb > la ? 1 : -1) : signs.rows[la - 1];
      if (dx != dy) d.set_arc(static_cast<int>(a), static_cast<int>(b));
    }
  return d;
}

std::vector<Permutation> enumerate_class(const GridMatrix& m, int n, GridMode mode) {
  if (n < 0 || n > 8) throw InputError("class enumeration is limited to n <= 8");
  std::vector<Permutation> out;
  for (const auto& p : all_permutations(n)) {
    bool in = mode == GridMode::grid ? monotone_gridding(p, m).has_value() : geometric_gridding(p, m).has_value();
    if (in) out.push_back(p);
  }
  return out;
}

std::string cell_token(const GridMatrix& m, const Cell& c) {
  bool wide = m.columns() > 9 || m.rows() > 9;
  return "a" + std::to_string(c.first) + (wide ? "_" : "") + std::to_string(c.second);
}

CellWord parse_cell_word(const GridMatrix& m, std::string_view text) {
  CellWord w;
  std::map<std::string, Cell> lookup;
  for (const auto& c : nonzero_cells(m)) lookup[cell_token(m, c)] = c;
  for (const auto& t : parse_word(text)) {
    auto it = lookup.find(t);
    if (it == lookup.end()) throw InputError("'" + t + "' is not a cell letter of this matrix");
    w.push_back(it->second);
  }
  return w;
}

Word to_word(const GridMatrix& m, const CellWord& w) {
  Word out;
  for (const auto& c : w) out.push_back(cell_token(m, c));
  return out;
}

std::string format_cell_word(const GridMatrix& m, const CellWord& w) { return format_word(to_word(m, w)); }

GridMatrix parse_matrix(std::string_view text) {
  auto lines = tokenize_lines(text);
  if (lines.empty() || lines[0][0] != "matrix" || lines[0].size() != 3) throw InputError("matrix text must start with 'matrix <s> <t>'");
  int s = parse_int(lines[0][1], "column count"), t = parse_int(lines[0][2], "row count");
  if (static_cast<int>(lines.size()) != t + 1) throw InputError("matrix text needs exactly t rows");
  GridMatrix m(s, t);
  for (int r = 0; r < t; ++r) {
    const auto& l = lines[r + 1];
    if (static_cast<int>(l.size()) != s) throw InputError("matrix row " + std::to_string(r + 1) + " needs " + std::to_string(s) + " entries");
    // Printed rows run top to bottom.
    for (int i = 0; i < s; ++i) m.set(i + 1, t - r, parse_int(l[i], "matrix entry"));
  }
  return m;
}

std::string format_matrix(const GridMatrix& m) {
  std::ostringstream out;
  out << "matrix " << m.columns() << " " << m.rows() << "\n";
  for (int j = m.rows(); j >= 1; --j) {
    for (int i = 1; i <= m.columns(); ++i) out << (i > 1 ? " " : "") << m.at(i, j);
    out << "\n";
  }
  return out.str();
}

std::string format_cut(int gap) { return std::to_string(gap) + ".5"; }

}  // namespace letgrid
