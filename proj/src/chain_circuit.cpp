#include "letgrid/chain_circuit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace letgrid {

namespace {

bool subset_toward(const Graph& g, int u, int v, const std::vector<int>& bag) {
  for (int w : bag)
    if (g.adjacent(u, w) && !g.adjacent(v, w)) return false;
  return true;
}

}  // namespace

ChainCircuit validate_circuit(Graph g, std::vector<std::vector<int>> bags) {
  int k = static_cast<int>(bags.size());
  if (k < 3) throw CircuitError(CircuitViolation::too_few_bags, "a chain circuit needs at least 3 bags");
  int n = g.order();
  ChainCircuit cc;
  cc.bag_.assign(n + 1, -1);
  cc.pos_.assign(n + 1, -1);
  for (int i = 0; i < k; ++i)
    for (std::size_t p = 0; p < bags[i].size(); ++p) {
      int v = bags[i][p];
      if (v < 1 || v > n) throw CircuitError(CircuitViolation::cover, "bag vertex " + std::to_string(v) + " out of range");
      if (cc.bag_[v] >= 0) throw CircuitError(CircuitViolation::cover, "vertex " + std::to_string(v) + " lies in two bags");
      cc.bag_[v] = i;
      cc.pos_[v] = static_cast<int>(p);
    }
  for (int v = 1; v <= n; ++v)
    if (cc.bag_[v] < 0) throw CircuitError(CircuitViolation::cover, "vertex " + std::to_string(v) + " is in no bag");
  for (auto [u, v] : g.edges()) {
    int a = cc.bag_[u], b = cc.bag_[v];
    if (a == b)
      throw CircuitError(CircuitViolation::independence, "bag " + std::to_string(a + 1) + " is not independent (edge " +
                                                             std::to_string(u) + "-" + std::to_string(v) + ")");
    if ((a + 1) % k != b && (b + 1) % k != a)
      throw CircuitError(CircuitViolation::stray_edge, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                                           " joins non-consecutive bags");
  }
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    if (!is_chain_pair(g, bags[i], bags[j]))
      throw CircuitError(CircuitViolation::chain_pair, "bags " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                           " do not induce a chain graph");
  }
  for (int i = 0; i < k; ++i) {
    const auto& fwd = bags[(i + 1) % k];
    const auto& back = bags[(i + k - 1) % k];
    for (std::size_t p = 0; p + 1 < bags[i].size(); ++p) {
      int u = bags[i][p], v = bags[i][p + 1];
      if (!subset_toward(g, v, u, fwd) || !subset_toward(g, u, v, back))
        throw CircuitError(CircuitViolation::order, "order of bag " + std::to_string(i + 1) +
                                                        " is not decreasing toward the next bag and increasing toward the previous one");
    }
  }
  cc.graph_ = std::move(g);
  cc.bags_ = std::move(bags);
  return cc;
}

int ckl_vertex(int l, int i, int m) { return (i - 1) * l + m; }

ChainCircuit generate_ckl(int k, int l) {
  if (k < 3) throw InputError("C_{k,l} needs k >= 3");
  if (l < 1) throw InputError("C_{k,l} needs l >= 1");
  Graph g(k * l);
  std::vector<std::vector<int>> bags(k);
  for (int i = 1; i <= k; ++i) {
    int i2 = i % k + 1;
    for (int m = 1; m <= l; ++m) {
      bags[i - 1].push_back(ckl_vertex(l, i, m));
      for (int n = m; n <= l; ++n) g.add_edge(ckl_vertex(l, i, m), ckl_vertex(l, i2, n));
    }
  }
  return validate_circuit(std::move(g), std::move(bags));
}

ChainCircuit cc_complement(const ChainCircuit& cc) {
  const Graph& g = cc.graph();
  Graph h(g.order());
  for (int i = 0; i < cc.k(); ++i)
    for (int u : cc.bags()[i])
      for (int v : cc.bags()[cc.next(i)])
        if (!g.adjacent(u, v)) h.add_edge(u, v);
  auto bags = cc.bags();
  for (auto& b : bags) std::reverse(b.begin(), b.end());
  return validate_circuit(std::move(h), std::move(bags));
}

Digraph conflict(const ChainCircuit& cc) {
  Digraph d(cc.order());
  for (int i = 0; i < cc.k(); ++i)
    for (int v : cc.bags()[i])
      for (int w : cc.bags()[cc.next(i)]) {
        if (cc.graph().adjacent(v, w))
          d.add_arc(v, w);
        else
          d.add_arc(w, v);
      }
  return d;
}

namespace {

std::vector<std::string> bag_letter_names(int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

}  // namespace

CyclicWordResult cyclic_word(const ChainCircuit& cc) {
  CyclicWordResult res;
  Digraph d = conflict(cc);
  std::vector<int> rank(cc.order() + 1, 0);
  for (int v = 1; v <= cc.order(); ++v) rank[v] = cc.bag_of(v) * (cc.order() + 1) + cc.position(v);
  auto order = topological_order(d, rank);
  if (!order) {
    res.cycle = *find_cycle(d);
    return res;
  }
  auto names = bag_letter_names(cc.k());
  Encoding e{Decoder(names), {}, *order, 0, cc.k(), 0};
  for (int i = 0; i < cc.k(); ++i) e.decoder.set_arc(i, cc.next(i));
  std::vector<char> used(cc.k(), 0);
  for (int v : *order) {
    e.word.push_back(names[cc.bag_of(v)]);
    used[cc.bag_of(v)] = 1;
  }
  e.letters_used = static_cast<int>(std::count(used.begin(), used.end(), 1));
  res.encoding = std::move(e);
  return res;
}

namespace {

class LayerSearch {
 public:
  LayerSearch(const ChainCircuit& cc, int p, bool anti, StepCounter& steps)
      : cc_(cc), k_(cc.k()), p_(p), anti_(anti), steps_(steps), layers_(p, std::vector<int>(cc.k(), 0)) {}

  bool run() { return assign(0); }
  const std::vector<std::vector<int>>& layers() const { return layers_; }

 private:
  // Required adjacency between u_{i,m} and u_{i+1,n}: m <= n (or its
  // negation when searching in the complement).
  bool want(int m, int n) const { return (m <= n) != anti_; }

  bool assign(int slot) {
    if (slot == k_ * p_) return true;
    steps_.tick();
    int j = slot / k_, i = slot % k_;
    const auto& bag = cc_.bags()[i];
    int from = j == 0 ? 0 : cc_.position(layers_[j - 1][i]) + 1;
    for (int pos = from; pos < static_cast<int>(bag.size()); ++pos) {
      int v = bag[pos];
      bool ok = true;
      // Check against everything already placed in the two neighbouring bags.
      int prev_bag = (i + k_ - 1) % k_, next_bag = (i + 1) % k_;
      for (int j2 = 0; j2 <= j && ok; ++j2) {
        if (j2 < j || prev_bag < i) {
          int u = layers_[j2][prev_bag];
          if (cc_.graph().adjacent(u, v) != want(j2, j)) ok = false;
        }
        if (ok && (j2 < j || next_bag < i)) {
          int u = layers_[j2][next_bag];
          if (cc_.graph().adjacent(v, u) != want(j, j2)) ok = false;
        }
      }
      if (!ok) continue;
      layers_[j][i] = v;
      if (assign(slot + 1)) return true;
    }
    return false;
  }

  const ChainCircuit& cc_;
  int k_, p_;
  bool anti_;
  StepCounter& steps_;
  std::vector<std::vector<int>> layers_;
};

}  // namespace

std::optional<std::vector<std::vector<int>>> find_cycle_layers(const ChainCircuit& cc, int p, Budget budget) {
  StepCounter steps(budget, "bag-respecting cycle search");
  return find_cycle_layers(cc, p, steps);
}

std::optional<std::vector<std::vector<int>>> find_cycle_layers(const ChainCircuit& cc, int p, StepCounter& steps) {
  if (p < 1) throw InputError("cycle layer count must be at least 1");
  LayerSearch s(cc, p, false, steps);
  if (!s.run()) return std::nullopt;
  return s.layers();
}

std::optional<VertexSet> find_cycle_subgraph(const ChainCircuit& cc, int p, Budget budget) {
  auto layers = find_cycle_layers(cc, p, budget);
  if (!layers) return std::nullopt;
  VertexSet out;
  for (const auto& l : *layers) out.insert(out.end(), l.begin(), l.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool has_anticycle(const ChainCircuit& cc, Budget budget) {
  StepCounter steps(budget, "bag-respecting anti-cycle search");
  LayerSearch s(cc, 1, true, steps);
  return s.run();
}

namespace {

std::vector<int> seed_by_bag(const ChainCircuit& cc, const VertexSet& seed) {
  std::vector<int> per(cc.k(), 0);
  if (static_cast<int>(seed.size()) != cc.k()) throw InputError("seed must have one vertex per bag");
  for (int v : seed) {
    if (v < 1 || v > cc.order()) throw InputError("seed vertex out of range");
    int b = cc.bag_of(v);
    if (per[b]) throw InputError("seed has two vertices in one bag");
    per[b] = v;
  }
  for (int i = 0; i < cc.k(); ++i)
    if (!cc.graph().adjacent(per[i], per[cc.next(i)])) throw InputError("seed is not a bag-respecting cycle");
  return per;
}

// Walks from `start` taking the extreme neighbour in the next (forward) or
// previous bag until a vertex repeats; returns the cycle indexed by bag.
std::vector<int> extreme_cycle(const ChainCircuit& cc, int start, bool forward) {
  std::vector<int> seen(cc.order() + 1, -1), walk;
  int v = start;
  while (seen[v] < 0) {
    seen[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    int b = forward ? cc.next(cc.bag_of(v)) : cc.prev(cc.bag_of(v));
    const auto& bag = cc.bags()[b];
    int pick = 0;
    if (forward) {
      for (int w : bag)
        if (cc.graph().adjacent(v, w)) {
          pick = w;
          break;
        }
    } else {
      for (auto it = bag.rbegin(); it != bag.rend(); ++it)
        if (cc.graph().adjacent(v, *it)) {
          pick = *it;
          break;
        }
    }
    if (!pick) throw std::logic_error("extreme-neighbour walk reached a vertex without neighbours");
    v = pick;
  }
  std::vector<int> cycle(cc.k(), 0);
  int len = static_cast<int>(walk.size()) - seen[v];
  if (len != cc.k()) throw std::logic_error("extreme-neighbour walk closed after " + std::to_string(len) + " steps");
  for (std::size_t t = seen[v]; t < walk.size(); ++t) cycle[cc.bag_of(walk[t])] = walk[t];
  return cycle;
}

SubCircuit sub_circuit(const ChainCircuit& cc, const std::vector<std::vector<int>>& part_bags) {
  std::vector<int> members;
  for (const auto& b : part_bags) members.insert(members.end(), b.begin(), b.end());
  std::sort(members.begin(), members.end());
  std::vector<int> local(cc.order() + 1, 0);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> bags;
  for (const auto& b : part_bags) {
    std::vector<int> nb;
    for (int v : b) nb.push_back(local[v]);
    bags.push_back(std::move(nb));
  }
  return SubCircuit{validate_circuit(induced_subgraph(cc.graph(), members), std::move(bags)), members};
}

}  // namespace

std::vector<int> blue_cycle(const ChainCircuit& cc, const VertexSet& seed) {
  auto per = seed_by_bag(cc, seed);
  return extreme_cycle(cc, per[cc.k() - 1], true);
}

RedBlueSplit red_blue_split(const ChainCircuit& cc, const VertexSet& seed) {
  auto per = seed_by_bag(cc, seed);
  RedBlueSplit s;
  s.blue = extreme_cycle(cc, per[cc.k() - 1], true);
  // The red walk starts where the blue cycle meets the last bag, so it is the
  // limit of the spiral used for the middle part.
  s.red = extreme_cycle(cc, s.blue[cc.k() - 1], false);
  std::vector<std::vector<int>> lb(cc.k()), mb(cc.k()), rb(cc.k());
  for (int i = 0; i < cc.k(); ++i) {
    int bpos = cc.position(s.blue[i]), rpos = cc.position(s.red[i]);
    if (bpos > rpos) throw std::logic_error("blue cycle lies right of the red cycle");
    for (int v : cc.bags()[i]) {
      int p = cc.position(v);
      (p < bpos ? lb : p > rpos ? rb : mb)[i].push_back(v);
    }
  }
  s.left = sub_circuit(cc, lb);
  s.middle = sub_circuit(cc, mb);
  s.right = sub_circuit(cc, rb);
  return s;
}

bool cross_structure_holds(const ChainCircuit& cc, const RedBlueSplit& split) {
  // part[v]: 0 = left, 1 = middle, 2 = right.
  std::vector<int> part(cc.order() + 1, -1);
  for (int v : split.left.original) part[v] = 0;
  for (int v : split.middle.original) part[v] = 1;
  for (int v : split.right.original) part[v] = 2;
  for (int v = 1; v <= cc.order(); ++v)
    if (part[v] < 0) return false;
  for (int i = 0; i < cc.k(); ++i)
    for (int u : cc.bags()[i])
      for (int w : cc.bags()[cc.next(i)]) {
        int a = part[u], b = part[w];
        if (a == b) continue;
        // Left is complete toward later parts of the next bag, right is
        // complete from earlier parts of the previous bag.
        bool complete = a == 0 || b == 2;
        if (cc.graph().adjacent(u, w) != complete) return false;
      }
  return true;
}

TwistedCircuit generate_twisted(int k, int l) {
  if (k < 3) throw InputError("twisted circuits need k >= 3");
  if (l < 1) throw InputError("twisted circuits need l >= 1");
  TwistedCircuit t{Graph(k * l), std::vector<std::vector<int>>(k), {}};
  for (int i = 1; i <= k; ++i)
    for (int m = 1; m <= l; ++m) t.bags[i - 1].push_back(ckl_vertex(l, i, m));
  // Bag i sits below bag i+1; lower position b meets upper position a when
  // b >= a, except between bags 2 and 3 where bag 2 is read backwards.
  for (int i = 1; i <= k; ++i) {
    int up = i % k + 1;
    bool twisted = i == 2;
    for (int b = 1; b <= l; ++b)
      for (int a = 1; a <= l; ++a)
        if (twisted ? b + a <= l + 1 : b >= a) t.graph.add_edge(ckl_vertex(l, i, b), ckl_vertex(l, up, a));
  }
  // 0-based bag indices; the twisted side of bag 2 (index 1) reads downward.
  for (int i = 0; i < k; ++i) {
    int up = (i + 1) % k, down = (i + k - 1) % k;
    t.signs.emplace_back(i, up, i == 1 ? -1 : 1);
    t.signs.emplace_back(i, down, -1);
  }
  return t;
}

ChainCircuit random_circuit(int k, int n, std::mt19937_64& rng) {
  if (k < 3) throw InputError("random circuits need k >= 3");
  std::vector<int> sizes(k, 0);
  if (n >= k) {
    for (int i = 0; i < k; ++i) sizes[i] = 1;
    for (int r = k; r < n; ++r) ++sizes[std::uniform_int_distribution<int>(0, k - 1)(rng)];
  } else {
    for (int r = 0; r < n; ++r) ++sizes[std::uniform_int_distribution<int>(0, k - 1)(rng)];
  }
  std::vector<std::vector<int>> bags(k);
  int next_id = 1;
  for (int i = 0; i < k; ++i)
    for (int p = 0; p < sizes[i]; ++p) bags[i].push_back(next_id++);
  Graph g(n);
  for (int i = 0; i < k; ++i) {
    const auto& a = bags[i];
    const auto& b = bags[(i + 1) % k];
    // Position p of bag i sees the suffix of bag i+1 starting at t[p].
    std::vector<int> t;
    for (std::size_t p = 0; p < a.size(); ++p)
      t.push_back(std::uniform_int_distribution<int>(0, static_cast<int>(b.size()))(rng));
    std::sort(t.begin(), t.end());
    for (std::size_t p = 0; p < a.size(); ++p)
      for (std::size_t q = t[p]; q < b.size(); ++q) g.add_edge(a[p], b[q]);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  // Old vertex v becomes perm[v-1].
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(perm[u - 1], perm[v - 1]);
  for (auto& b : bags)
    for (int& v : b) v = perm[v - 1];
  return validate_circuit(std::move(h), std::move(bags));
}

ChainCircuit parse_circuit(std::string_view text) {
  auto lines = tokenize_lines(text);
  std::string graph_text;
  std::map<int, std::vector<int>> bags;
  for (const auto& l : lines) {
    if (l[0] == "bag") {
      if (l.size() < 3 || l[2] != ":") throw InputError("expected 'bag <b> : <vertices>'");
      int b = parse_int(l[1], "bag index");
      if (bags.count(b)) throw InputError("bag " + l[1] + " listed twice");
      auto& vs = bags[b];
      for (std::size_t i = 3; i < l.size(); ++i) vs.push_back(parse_int(l[i], "bag vertex"));
    } else {
      for (const auto& t : l) graph_text += t + " ";
      graph_text += "\n";
    }
  }
  Graph g = parse_graph(graph_text);
  std::vector<std::vector<int>> ordered;
  int expect = 1;
  for (auto& [b, vs] : bags) {
    if (b != expect++) throw InputError("bags must be numbered 1..k");
    ordered.push_back(std::move(vs));
  }
  return validate_circuit(std::move(g), std::move(ordered));
}

std::string format_circuit(const ChainCircuit& cc) {
  std::ostringstream out;
  out << format_graph(cc.graph());
  for (int i = 0; i < cc.k(); ++i) {
    out << "bag " << i + 1 << " :";
    for (int v : cc.bags()[i]) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::string format_encoding(const Encoding& e) {
  std::ostringstream out;
  out << format_decoder(e.decoder);
  out << "word " << format_word(e.word) << "\n";
  out << "vertices";
  for (int v : e.vertices) out << " " << v;
  out << "\n";
  return out.str();
}

}  // namespace letgrid
