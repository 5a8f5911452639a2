#include "letgrid/loh.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace letgrid {

int Loh::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == name) return i + 1;
  return 0;
}

namespace {

// Edge indices containing each element (index x-1), ascending.
std::vector<std::vector<int>> signatures(int m, const std::vector<Hyperedge>& edges) {
  std::vector<std::vector<int>> sig(m);
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (int x : edges[e].members) sig[x - 1].push_back(static_cast<int>(e));
  return sig;
}

std::vector<VertexSet> group_cells(int m, const std::vector<Hyperedge>& edges) {
  auto sig = signatures(m, edges);
  std::map<std::vector<int>, int> index;
  std::vector<VertexSet> out;
  for (int x = 1; x <= m; ++x) {
    auto [it, fresh] = index.emplace(sig[x - 1], static_cast<int>(out.size()));
    if (fresh) out.emplace_back();
    out[it->second].push_back(x);
  }
  return out;
}

}  // namespace

Loh validate_loh(std::vector<std::string> elements, std::vector<Hyperedge> edges) {
  int m = static_cast<int>(elements.size());
  std::set<std::string> names(elements.begin(), elements.end());
  if (static_cast<int>(names.size()) != m) throw InputError("element names must be distinct");
  std::set<std::string> edge_names;
  for (const auto& e : edges) {
    if (!edge_names.insert(e.name).second) throw InputError("hyperedge " + e.name + " listed twice");
    if (e.members.empty()) throw InputError("hyperedge " + e.name + " is empty");
    std::vector<char> seen(m + 1, 0);
    for (int x : e.members) {
      if (x < 1 || x > m) throw InputError("hyperedge " + e.name + " has a member out of range");
      if (seen[x]) throw InputError("hyperedge " + e.name + " lists " + elements[x - 1] + " twice");
      seen[x] = 1;
    }
  }
  auto sig = signatures(m, edges);
  for (int x = 1; x <= m; ++x)
    if (sig[x - 1].empty()) throw InputError("element " + elements[x - 1] + " is isolated");

  for (const auto& cell : group_cells(m, edges)) {
    if (cell.size() < 2) continue;
    std::vector<char> in(m + 1, 0);
    for (int x : cell) in[x] = 1;
    const auto& incident = sig[cell[0] - 1];
    std::vector<int> first;
    for (int x : edges[incident[0]].members)
      if (in[x]) first.push_back(x);
    for (std::size_t i = 1; i < incident.size(); ++i) {
      std::vector<int> other;
      for (int x : edges[incident[i]].members)
        if (in[x]) other.push_back(x);
      if (other != first) {
        std::string c;
        for (int x : cell) c += (c.empty() ? "" : ",") + elements[x - 1];
        throw InputError("cell {" + c + "} is ordered differently by " + edges[incident[0]].name + " and " +
                         edges[incident[i]].name);
      }
    }
  }
  Loh h;
  h.elements_ = std::move(elements);
  h.edges_ = std::move(edges);
  return h;
}

std::vector<VertexSet> cells(const Loh& h) { return group_cells(h.size(), h.edges()); }

Digraph conflict(const Loh& h) {
  Digraph d(h.size());
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.members.size(); ++i)
      for (std::size_t j = i + 1; j < e.members.size(); ++j) d.add_arc(e.members[i], e.members[j]);
  return d;
}

ConsistencyResult is_globally_consistent(const Loh& h) {
  Digraph d = conflict(h);
  ConsistencyResult r;
  r.order = topological_order(d);
  if (!r.order) r.cycle = *find_cycle(d);
  return r;
}

Loh split(const Loh& h, int x) {
  if (x < 1 || x > h.size()) throw InputError("split element out of range");
  std::vector<Hyperedge> pieces;
  for (const auto& e : h.edges()) {
    auto it = std::find(e.members.begin(), e.members.end(), x);
    if (it == e.members.end()) {
      pieces.push_back(e);
      continue;
    }
    std::vector<int> lo(e.members.begin(), it), hi(it + 1, e.members.end());
    if (!lo.empty()) pieces.push_back({e.name + ".lo", lo});
    if (!hi.empty()) pieces.push_back({e.name + ".hi", hi});
  }
  // Keep the elements still covered by some piece, renumbered in order.
  std::vector<int> renum(h.size() + 1, 0);
  for (const auto& e : pieces)
    for (int y : e.members) renum[y] = 1;
  std::vector<std::string> names;
  for (int y = 1; y <= h.size(); ++y)
    if (renum[y]) {
      names.push_back(h.element(y));
      renum[y] = static_cast<int>(names.size());
    }
  for (auto& e : pieces)
    for (int& y : e.members) y = renum[y];
  return validate_loh(std::move(names), std::move(pieces));
}

namespace {

// Edge names are bookkeeping only; the state is the multiset of ordered member lists.
std::string state_key(const Loh& h) {
  std::vector<std::string> parts;
  for (const auto& e : h.edges()) {
    std::string s;
    for (int x : e.members) s += h.element(x) + '\x1f';
    parts.push_back(std::move(s));
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + '\x1e';
  return key;
}

}  // namespace

InconsistencyResult global_inconsistency(const Loh& h, int max_depth, Budget budget) {
  if (max_depth < 0) max_depth = h.size();
  StepCounter steps(budget, "global inconsistency search");
  std::vector<Loh> level{h};
  std::set<std::string> seen{state_key(h)};
  for (int depth = 0;; ++depth) {
    for (const auto& s : level) {
      if (!steps.try_tick()) return {depth, false};
      if (is_globally_consistent(s).order) return {depth, true};
    }
    if (depth == max_depth) return {depth + 1, false};
    std::vector<Loh> next;
    for (const auto& s : level)
      for (int x = 1; x <= s.size(); ++x) {
        if (!steps.try_tick()) return {depth + 1, false};
        Loh t = split(s, x);
        if (seen.insert(state_key(t)).second) next.push_back(std::move(t));
      }
    level = std::move(next);
  }
}

Loh from_chain_circuit(const ChainCircuit& cc) {
  int n = cc.order();
  std::vector<std::string> names;
  for (int v = 1; v <= n; ++v) names.push_back(std::to_string(v));
  const Graph& g = cc.graph();
  std::vector<Hyperedge> edges;
  for (int i = 0; i < cc.k(); ++i) {
    const auto& a = cc.bags()[i];
    const auto& b = cc.bags()[cc.next(i)];
    if (a.empty() && b.empty()) continue;
    Digraph d(n);
    std::vector<int> rank(n + 1, 0);
    for (std::size_t p = 0; p < a.size(); ++p) {
      rank[a[p]] = static_cast<int>(p);
      if (p + 1 < a.size()) d.add_arc(a[p], a[p + 1]);
    }
    for (std::size_t p = 0; p < b.size(); ++p) {
      rank[b[p]] = n + static_cast<int>(p);
      if (p + 1 < b.size()) d.add_arc(b[p], b[p + 1]);
    }
    for (int u : a)
      for (int w : b) {
        if (g.adjacent(u, w))
          d.add_arc(u, w);
        else
          d.add_arc(w, u);
      }
    auto order = topological_order(d, rank);
    if (!order) throw std::logic_error("bag pair order and conflict arcs are not compatible");
    Hyperedge e{"h" + std::to_string(i + 1), {}};
    std::vector<char> in(n + 1, 0);
    for (int u : a) in[u] = 1;
    for (int w : b) in[w] = 1;
    for (int v : *order)
      if (in[v]) e.members.push_back(v);
    edges.push_back(std::move(e));
  }
  return validate_loh(std::move(names), std::move(edges));
}

Loh random_loh(int m, int edge_count, std::mt19937_64& rng) {
  if (m < 1 || edge_count < 1) throw InputError("random LOH needs at least one element and one hyperedge");
  std::vector<std::string> names;
  for (int x = 1; x <= m; ++x) names.push_back(std::to_string(x));
  std::vector<Hyperedge> edges(edge_count);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> pick_edge(0, edge_count - 1);
  for (int e = 0; e < edge_count; ++e) edges[e].name = "e" + std::to_string(e + 1);
  for (int x = 1; x <= m; ++x) {
    bool any = false;
    for (auto& e : edges)
      if (coin(rng)) {
        e.members.push_back(x);
        any = true;
      }
    if (!any) edges[pick_edge(rng)].members.push_back(x);
  }
  edges.erase(std::remove_if(edges.begin(), edges.end(), [](const Hyperedge& e) { return e.members.empty(); }), edges.end());

  // Shuffle each edge, then rewrite every cell's slots in one shared cell order.
  auto cell_list = group_cells(m, edges);
  std::vector<int> cell_of(m + 1), cell_rank(m + 1);
  for (std::size_t c = 0; c < cell_list.size(); ++c) {
    std::shuffle(cell_list[c].begin(), cell_list[c].end(), rng);
    for (std::size_t r = 0; r < cell_list[c].size(); ++r) {
      cell_of[cell_list[c][r]] = static_cast<int>(c);
      cell_rank[cell_list[c][r]] = static_cast<int>(r);
    }
  }
  for (auto& e : edges) {
    std::shuffle(e.members.begin(), e.members.end(), rng);
    std::map<int, std::vector<std::size_t>> slots;
    for (std::size_t p = 0; p < e.members.size(); ++p) slots[cell_of[e.members[p]]].push_back(p);
    auto old = e.members;
    for (auto& [c, ps] : slots) {
      std::vector<int> xs;
      for (auto p : ps) xs.push_back(old[p]);
      std::sort(xs.begin(), xs.end(), [&](int a, int b) { return cell_rank[a] < cell_rank[b]; });
      for (std::size_t i = 0; i < ps.size(); ++i) e.members[ps[i]] = xs[i];
    }
  }
  return validate_loh(std::move(names), std::move(edges));
}

Loh parse_loh(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<Hyperedge> edges;
  for (const auto& l : tokenize_lines(text)) {
    if (l[0] == "elem") {
      for (std::size_t i = 1; i < l.size(); ++i) {
        if (index.count(l[i])) throw InputError("element " + l[i] + " declared twice");
        names.push_back(l[i]);
        index[l[i]] = static_cast<int>(names.size());
      }
    } else if (l[0] == "edge") {
      if (l.size() < 3 || l[2] != ":") throw InputError("expected 'edge <name> : <members>'");
      Hyperedge e{l[1], {}};
      for (std::size_t i = 3; i < l.size(); ++i) {
        auto it = index.find(l[i]);
        if (it == index.end()) throw InputError("edge " + l[1] + " names undeclared element " + l[i]);
        e.members.push_back(it->second);
      }
      edges.push_back(std::move(e));
    } else {
      throw InputError("unexpected line starting with '" + l[0] + "' in LOH text");
    }
  }
  return validate_loh(std::move(names), std::move(edges));
}

std::string format_loh(const Loh& h) {
  std::ostringstream out;
  out << "elem";
  for (const auto& name : h.elements()) out << " " << name;
  out << "\n";
  for (const auto& e : h.edges()) {
    out << "edge " << e.name << " :";
    for (int x : e.members) out << " " << h.element(x);
    out << "\n";
  }
  return out.str();
}

}  // namespace letgrid
