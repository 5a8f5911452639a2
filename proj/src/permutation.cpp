#include "letgrid/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace letgrid {

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
  std::vector<char> seen(v_.size() + 1, 0);
  for (int x : v_) {
    if (x < 1 || x > size()) throw InputError("permutation value " + std::to_string(x) + " out of range 1.." + std::to_string(size()));
    if (seen[x]) throw InputError("permutation repeats value " + std::to_string(x));
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(v_.size());
  for (int i = 0; i < size(); ++i) w[v_[i] - 1] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::reverse() const { return Permutation(std::vector<int>(v_.rbegin(), v_.rend())); }

Permutation Permutation::complement() const {
  std::vector<int> w(v_);
  for (int& x : w) x = size() + 1 - x;
  return Permutation(std::move(w));
}

int Permutation::inversions() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) c += v_[i] > v_[j];
  return c;
}

bool order_isomorphic(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j]) || (a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

namespace {

// Extends the chosen prefix while every new value compares with the earlier
// ones exactly as in sigma.
bool extend(const Permutation& pi, const Permutation& sigma, std::vector<int>& idx, int from) {
  int k = static_cast<int>(idx.size());
  if (k == sigma.size()) return true;
  for (int i = from; i <= pi.size() - (sigma.size() - k) + 1; ++i) {
    bool ok = true;
    for (int j = 0; j < k && ok; ++j)
      if ((pi(idx[j]) < pi(i)) != (sigma(j + 1) < sigma(k + 1))) ok = false;
    if (!ok) continue;
    idx.push_back(i);
    if (extend(pi, sigma, idx, i + 1)) return true;
    idx.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> contains_pattern(const Permutation& pi, const Permutation& sigma) {
  std::vector<int> idx;
  if (sigma.size() > pi.size()) return std::nullopt;
  if (extend(pi, sigma, idx, 1)) return idx;
  return std::nullopt;
}

Permutation sum(const Permutation& pi, const Permutation& sigma, SumMode mode) {
  std::vector<int> v;
  int a = pi.size(), b = sigma.size();
  if (mode == SumMode::direct) {
    for (int x : pi.values()) v.push_back(x);
    for (int x : sigma.values()) v.push_back(x + a);
  } else {
    for (int x : pi.values()) v.push_back(x + b);
    for (int x : sigma.values()) v.push_back(x);
  }
  return Permutation(std::move(v));
}

Graph inversion_graph(const Permutation& pi) {
  Graph g(pi.size());
  for (int i = 1; i <= pi.size(); ++i)
    for (int j = i + 1; j <= pi.size(); ++j)
      if (pi(i) > pi(j)) g.add_edge(i, j);
  return g;
}

Permutation pi_n(int n) {
  if (n < 1) throw InputError("pi_n needs n >= 1");
  std::vector<int> v;
  int top = n * n;
  for (int i = 1; i <= n; ++i) {
    int r = i % n;
    for (int x = top; x >= 1; --x)
      if (x % n == r) v.push_back(x);
  }
  return Permutation(std::move(v));
}

Permutation standardize(const std::vector<int>& values) {
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> out(values.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> v;
  std::istringstream in{std::string(text)};
  std::string t;
  while (in >> t) v.push_back(parse_int(t, "permutation entry"));
  return Permutation(std::move(v));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.values()[i]);
  }
  return out;
}

}  // namespace letgrid
