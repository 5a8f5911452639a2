#include "letgrid/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace letgrid {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw InputError("graph order must be non-negative");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check(int v) const {
  if (v < 1 || v > n_) throw InputError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

void Graph::set_edge(int u, int v, bool on) {
  check(u);
  check(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  int a = u - 1, b = v - 1;
  auto bit_a = std::uint64_t{1} << (b % 64);
  auto bit_b = std::uint64_t{1} << (a % 64);
  if (on) {
    bits_[a * words_ + b / 64] |= bit_a;
    bits_[b * words_ + a / 64] |= bit_b;
  } else {
    bits_[a * words_ + b / 64] &= ~bit_a;
    bits_[b * words_ + a / 64] &= ~bit_b;
  }
}

int Graph::size() const {
  int total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total / 2;
}

int Graph::degree(int v) const {
  check(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(bits_[(v - 1) * words_ + w]);
  return d;
}

std::vector<int> Graph::neighbours(int v) const {
  check(v);
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (test(v - 1, u)) out.push_back(u + 1);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (test(i, j)) out.emplace_back(i + 1, j + 1);
  return out;
}

std::uint64_t Graph::mask(int v) const {
  check(v);
  if (n_ > 64) throw InputError("bit-mask neighbourhoods need at most 64 vertices");
  return bits_[v - 1];
}

Graph generate(GraphFamily family, int n) {
  if (n < 1) throw InputError("family order must be at least 1");
  switch (family) {
    case GraphFamily::complete: {
      Graph g(n);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
      return g;
    }
    case GraphFamily::path: {
      Graph g(n);
      for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case GraphFamily::cycle: {
      if (n < 3) throw InputError("cycle needs at least 3 vertices");
      Graph g = generate(GraphFamily::path, n);
      g.add_edge(1, n);
      return g;
    }
    case GraphFamily::matching: {
      Graph g(2 * n);
      for (int i = 1; i <= n; ++i) g.add_edge(2 * i - 1, 2 * i);
      return g;
    }
    case GraphFamily::edgeless:
      return Graph(n);
  }
  throw InputError("unknown graph family");
}

std::optional<GraphFamily> family_from_name(std::string_view name) {
  if (name == "complete") return GraphFamily::complete;
  if (name == "path") return GraphFamily::path;
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "matching") return GraphFamily::matching;
  if (name == "edgeless") return GraphFamily::edgeless;
  return std::nullopt;
}

namespace {

VertexSet normalized(const Graph& g, const VertexSet& u) {
  VertexSet s = u;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("repeated vertex in vertex set");
  for (int v : s)
    if (v < 1 || v > g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
  return s;
}

}  // namespace

Graph induced_subgraph(const Graph& g, const VertexSet& u) {
  VertexSet s = normalized(g, u);
  Graph h(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) h.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return h;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int i = 1; i <= g.order(); ++i)
    for (int j = i + 1; j <= g.order(); ++j)
      if (!g.adjacent(i, j)) h.add_edge(i, j);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(u + a.order(), v + a.order());
  return h;
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
  int n = g.order();
  if (static_cast<int>(order.size()) != n) throw InputError("relabelling must list every vertex once");
  std::vector<char> seen(n + 1, 0);
  for (int v : order) {
    if (v < 1 || v > n || seen[v]) throw InputError("relabelling is not a permutation");
    seen[v] = 1;
  }
  Graph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(order[i], order[j])) h.add_edge(i + 1, j + 1);
  return h;
}

bool is_homogeneous(const Graph& g, const VertexSet& u) {
  VertexSet s = normalized(g, u);
  if (s.size() < 2) return true;
  bool first = g.adjacent(s[0], s[1]);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j]) != first) return false;
  return true;
}

bool is_chain_pair(const Graph& g, const VertexSet& a, const VertexSet& b) {
  VertexSet sa = normalized(g, a), sb = normalized(g, b);
  for (int v : sa)
    if (std::binary_search(sb.begin(), sb.end(), v)) throw InputError("chain pair sides overlap");
  // Neighbourhoods into b must be pairwise comparable under inclusion.
  std::vector<std::vector<char>> nb;
  for (int x : sa) {
    std::vector<char> row;
    for (int y : sb) row.push_back(g.adjacent(x, y));
    nb.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      bool i_only = false, j_only = false;
      for (std::size_t t = 0; t < sb.size(); ++t) {
        i_only |= nb[i][t] && !nb[j][t];
        j_only |= nb[j][t] && !nb[i][t];
      }
      if (i_only && j_only) return false;
    }
  return true;
}

int cochromatic_number(const Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  if (n > 20) throw InputError("cochromatic number is limited to 20 vertices");
  std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint32_t> nb(n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v && g.adjacent(u + 1, v + 1)) nb[v] |= 1U << u;
  std::vector<char> clique(full + 1, 0), indep(full + 1, 0);
  clique[0] = indep[0] = 1;
  for (std::uint32_t m = 1; m <= full; ++m) {
    int v = std::countr_zero(m);
    std::uint32_t rest = m & (m - 1);
    clique[m] = clique[rest] && ((nb[v] & rest) == rest);
    indep[m] = indep[rest] && ((nb[v] & rest) == 0);
  }
  std::vector<std::uint8_t> best(full + 1, 0);
  for (std::uint32_t m = 1; m <= full; ++m) {
    int low = std::countr_zero(m);
    std::uint32_t rest = m & ~(1U << low);
    std::uint8_t b = 255;
    // Sub-masks of m that contain the lowest vertex.
    for (std::uint32_t s = rest;; s = (s - 1) & rest) {
      std::uint32_t part = s | (1U << low);
      if ((clique[part] || indep[part]) && best[m ^ part] + 1 < b) b = static_cast<std::uint8_t>(best[m ^ part] + 1);
      if (s == 0) break;
    }
    best[m] = b;
  }
  return best[full];
}

namespace {

// Branch and bound over vertex orders for the least lower-triangle adjacency
// string; positions are grouped by a vertex invariant and twins are swapped
// freely.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    std::vector<std::pair<std::vector<int>, int>> inv;
    for (int v = 1; v <= n_; ++v) {
      std::vector<int> key{g.degree(v)};
      std::vector<int> nd;
      for (int u : g.neighbours(v)) nd.push_back(g.degree(u));
      std::sort(nd.begin(), nd.end());
      key.insert(key.end(), nd.begin(), nd.end());
      inv.emplace_back(std::move(key), v);
    }
    std::sort(inv.begin(), inv.end());
    cls_.assign(n_ + 1, 0);
    int c = -1;
    for (int i = 0; i < n_; ++i) {
      if (i == 0 || inv[i].first != inv[i - 1].first) ++c;
      cls_[inv[i].second] = c;
      slot_.push_back(c);
    }
    twin_.assign((n_ + 1) * (n_ + 1), 0);
    for (int a = 1; a <= n_; ++a)
      for (int b = a + 1; b <= n_; ++b) {
        bool same = cls_[a] == cls_[b];
        for (int x = 1; same && x <= n_; ++x)
          if (x != a && x != b && g.adjacent(a, x) != g.adjacent(b, x)) same = false;
        twin_[a * (n_ + 1) + b] = twin_[b * (n_ + 1) + a] = same;
      }
    used_.assign(n_ + 1, 0);
    cur_.assign(n_ * (n_ - 1) / 2 + 1, 0);
  }

  std::vector<int> run() {
    if (n_ == 0) return {};
    dfs(0, 0);
    return best_order_;
  }

 private:
  // state: 0 = prefix equals best prefix, -1 = prefix already smaller.
  void dfs(int p, int state) {
    if (p == n_) {
      if (!have_best_ || state < 0) {
        best_ = cur_;
        best_order_ = order_;
        have_best_ = true;
        ++generation_;
      }
      return;
    }
    int base = p * (p - 1) / 2;
    for (int v = 1; v <= n_; ++v) {
      if (used_[v] || cls_[v] != slot_[p]) continue;
      bool skip = false;
      for (int w = 1; w < v && !skip; ++w)
        if (!used_[w] && twin_[w * (n_ + 1) + v]) skip = true;
      if (skip) continue;
      int st = state;
      for (int q = 0; q < p; ++q) cur_[base + q] = g_.adjacent(v, order_[q]);
      if (st == 0 && have_best_) {
        int cmp = 0;
        for (int q = 0; q < p && cmp == 0; ++q)
          if (cur_[base + q] != best_[base + q]) cmp = cur_[base + q] < best_[base + q] ? -1 : 1;
        if (cmp > 0) continue;
        st = cmp;
      }
      used_[v] = 1;
      order_.push_back(v);
      auto gen = generation_;
      dfs(p + 1, st);
      order_.pop_back();
      used_[v] = 0;
      // A new best found below shares this node's prefix.
      if (generation_ != gen) state = 0;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> cls_, slot_;
  std::vector<char> twin_, used_, cur_, best_;
  std::vector<int> order_, best_order_;
  bool have_best_ = false;
  std::uint64_t generation_ = 0;
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) { return CanonicalSearch(g).run(); }

std::string canonical_key(const Graph& g) {
  auto order = canonical_order(g);
  std::string key = std::to_string(g.order()) + ":";
  for (int i = 1; i < g.order(); ++i)
    for (int j = 0; j < i; ++j) key.push_back(g.adjacent(order[i], order[j]) ? '1' : '0');
  return key;
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_order(g)); }

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 1; v <= g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Colour refinement run on both graphs at once so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> joint_refinement(const Graph& a, const Graph& b) {
  int n = a.order();
  std::vector<int> ca(n + 1, 0), cb(n + 1, 0);
  int classes = 1;
  for (;;) {
    std::map<std::vector<int>, int> ids;
    auto signature = [&](const Graph& g, const std::vector<int>& col, int v) {
      std::vector<int> s;
      for (int u : g.neighbours(v)) s.push_back(col[u]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), col[v]);
      return s;
    };
    std::vector<std::vector<int>> sa(n + 1), sb(n + 1);
    for (int v = 1; v <= n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      ids.emplace(sa[v], 0);
      ids.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (int v = 1; v <= n; ++v) {
      ca[v] = ids[sa[v]];
      cb[v] = ids[sb[v]];
    }
    if (next == classes) break;
    classes = next;
  }
  return {ca, cb};
}

bool extend_mapping(const Graph& a, const Graph& b, const std::vector<int>& seq, std::size_t idx,
                    const std::vector<int>& ca, const std::vector<int>& cb, std::vector<int>& map,
                    std::vector<char>& taken) {
  if (idx == seq.size()) return true;
  int v = seq[idx];
  for (int w = 1; w <= b.order(); ++w) {
    if (taken[w] || ca[v] != cb[w]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < idx && ok; ++j)
      if (a.adjacent(v, seq[j]) != b.adjacent(w, map[seq[j]])) ok = false;
    if (!ok) continue;
    map[v] = w;
    taken[w] = 1;
    if (extend_mapping(a, b, seq, idx + 1, ca, cb, map, taken)) return true;
    taken[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (degree_sequence(a) != degree_sequence(b)) return std::nullopt;
  int n = a.order();
  auto [ca, cb] = joint_refinement(a, b);
  std::vector<int> ha(ca.begin() + 1, ca.end()), hb(cb.begin() + 1, cb.end());
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return std::nullopt;
  // Map rare colours first, then grow along edges so constraints bite early.
  std::map<int, int> freq;
  for (int v = 1; v <= n; ++v) ++freq[ca[v]];
  std::vector<int> seq;
  std::vector<char> in_seq(n + 1, 0);
  while (static_cast<int>(seq.size()) < n) {
    int pick = -1;
    long best_score = 0;
    for (int v = 1; v <= n; ++v) {
      if (in_seq[v]) continue;
      int links = 0;
      for (int u : seq) links += a.adjacent(u, v);
      long score = static_cast<long>(links) * 1000 - freq[ca[v]];
      if (pick < 0 || score > best_score) pick = v, best_score = score;
    }
    seq.push_back(pick);
    in_seq[pick] = 1;
  }
  std::vector<int> map(n + 1, 0);
  std::vector<char> taken(n + 1, 0);
  if (!extend_mapping(a, b, seq, 0, ca, cb, map, taken)) return std::nullopt;
  return std::vector<int>(map.begin() + 1, map.end());
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  if (a.order() <= 10) return canonical_key(a) == canonical_key(b);
  return find_isomorphism(a, b).has_value();
}

std::optional<VertexSet> contains_induced(const Graph& host, const Graph& pattern, Budget budget) {
  int n = host.order(), k = pattern.order();
  if (k > n) return std::nullopt;
  if (k == 0) return VertexSet{};
  StepCounter steps(budget, "induced subgraph search");
  int m = pattern.size();
  auto pdeg = degree_sequence(pattern);
  std::string pkey = k <= 10 ? canonical_key(pattern) : std::string();
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 1);
  for (;;) {
    steps.tick();
    Graph sub = induced_subgraph(host, pick);
    if (sub.size() == m && degree_sequence(sub) == pdeg) {
      bool iso = k <= 10 ? canonical_key(sub) == pkey : find_isomorphism(sub, pattern).has_value();
      if (iso) return pick;
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i + 1) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0) throw InputError("order must be non-negative");
  if (n == 0) return {Graph(0)};
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for (const Graph& base : enumerate_graphs(n - 1)) {
    for (std::uint32_t nb = 0; nb < (1U << (n - 1)); ++nb) {
      Graph g(n);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (int u = 0; u < n - 1; ++u)
        if (nb >> u & 1U) g.add_edge(u + 1, n);
      if (seen.insert(canonical_key(g)).second) out.push_back(canonical_form(g));
    }
  }
  return out;
}

std::vector<std::vector<std::string>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

int parse_int(const std::string& token, std::string_view what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) throw InputError("expected integer for " + std::string(what) + ", got '" + token + "'");
  return value;
}

Graph parse_graph(std::string_view text) {
  auto lines = tokenize_lines(text);
  if (lines.empty() || lines[0][0] != "graph" || lines[0].size() != 2) throw InputError("graph text must start with 'graph <n>'");
  Graph g(parse_int(lines[0][1], "vertex count"));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l[0] != "e" || l.size() != 3) throw InputError("expected 'e <i> <j>' on graph line " + std::to_string(i + 1));
    int u = parse_int(l[1], "edge endpoint"), v = parse_int(l[2], "edge endpoint");
    if (u == v) throw InputError("loop in graph text");
    if (u >= 1 && u <= g.order() && v >= 1 && v <= g.order() && g.adjacent(u, v)) throw InputError("repeated edge in graph text");
    g.add_edge(u, v);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 1; v <= g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace letgrid
