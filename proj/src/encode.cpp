#include <algorithm>
#include <map>

#include "letgrid/chain_circuit.hpp"

namespace letgrid {

namespace {

// Letters are plain integers here; each letter's vertices lie in one bag.
struct RawEncoding {
  std::vector<int> letter_bag;
  std::vector<std::vector<char>> arc;
  std::vector<int> word;      // letter at each position
  std::vector<int> vertices;  // circuit vertex at each position
  int budget = 0;
  int fallbacks = 0;

  int add_letter(int bag) {
    letter_bag.push_back(bag);
    for (auto& row : arc) row.push_back(0);
    arc.emplace_back(letter_bag.size(), 0);
    return static_cast<int>(letter_bag.size()) - 1;
  }
};

RawEncoding base_encoding(const ChainCircuit& cc, const std::vector<int>& order) {
  RawEncoding r;
  std::vector<int> letter(cc.k(), -1);
  for (int i = 0; i < cc.k(); ++i)
    if (!cc.bags()[i].empty()) letter[i] = r.add_letter(i);
  for (int i = 0; i < cc.k(); ++i)
    if (letter[i] >= 0 && letter[cc.next(i)] >= 0) r.arc[letter[i]][letter[cc.next(i)]] = 1;
  for (int v : order) {
    r.word.push_back(letter[cc.bag_of(v)]);
    r.vertices.push_back(v);
  }
  r.budget = static_cast<int>(r.letter_bag.size());
  return r;
}

// One letter per vertex: any word order works once arcs copy the adjacency.
RawEncoding singleton_encoding(const ChainCircuit& cc) {
  RawEncoding r;
  for (int v = 1; v <= cc.order(); ++v) {
    r.add_letter(cc.bag_of(v));
    r.word.push_back(v - 1);
    r.vertices.push_back(v);
  }
  for (int u = 1; u <= cc.order(); ++u)
    for (int v = u + 1; v <= cc.order(); ++v)
      if (cc.graph().adjacent(u, v)) r.arc[u - 1][v - 1] = 1;
  r.budget = cc.order();
  return r;
}

// Middle part: the blue cycle is the first vertex of every bag, and the red
// walk spirals outward from it through cycles S_0, S_1, ... until it repeats.
RawEncoding middle_encoding(const ChainCircuit& cc, StepCounter& steps) {
  int k = cc.k();
  const Graph& g = cc.graph();
  std::vector<std::vector<int>> spiral;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = cc.bags()[i].front();
  spiral.push_back(cur);
  auto rightmost_prev = [&](int x) {
    const auto& prev = cc.bags()[cc.prev(cc.bag_of(x))];
    for (auto it = prev.rbegin(); it != prev.rend(); ++it)
      if (g.adjacent(x, *it)) return *it;
    throw std::logic_error("spiral walk reached a vertex without a previous-bag neighbour");
  };
  // S_1 starts at the same last-bag vertex as S_0 and may coincide with it
  // without the walk having closed up yet.
  int v = cur[k - 1];
  for (bool first = true;; first = false) {
    steps.tick();
    std::vector<int> s(k);
    s[k - 1] = v;
    for (int i = k - 2; i >= 0; --i) s[i] = rightmost_prev(s[i + 1]);
    if (s == spiral.back()) {
      if (!first) break;
    } else {
      spiral.push_back(s);
    }
    v = rightmost_prev(s[0]);
  }

  // Groups: each distinct spiral vertex alone, and the vertices strictly
  // between consecutive spiral cycles in each bag.
  std::vector<int> group(cc.order() + 1, -1);
  std::vector<std::vector<int>> members;
  std::vector<int> group_bag;
  for (int i = 0; i < k; ++i) {
    const auto& bag = cc.bags()[i];
    for (std::size_t j = 0; j < spiral.size(); ++j) {
      int pos = cc.position(spiral[j][i]);
      if (group[spiral[j][i]] < 0) {
        group[spiral[j][i]] = static_cast<int>(members.size());
        members.push_back({spiral[j][i]});
        group_bag.push_back(i);
      }
      if (j + 1 < spiral.size()) {
        int end = cc.position(spiral[j + 1][i]);
        if (end > pos + 1) {
          int id = static_cast<int>(members.size());
          members.emplace_back();
          group_bag.push_back(i);
          for (int p = pos + 1; p < end; ++p) {
            group[bag[p]] = id;
            members.back().push_back(bag[p]);
          }
        }
      }
    }
  }
  for (int u = 1; u <= cc.order(); ++u)
    if (group[u] < 0) throw std::logic_error("spiral groups do not cover the middle part");

  int ng = static_cast<int>(members.size());
  std::vector<std::vector<char>> arc(ng, std::vector<char>(ng, 0));
  Digraph prec(cc.order());
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b) {
      if (cc.next(group_bag[a]) != group_bag[b]) continue;
      int edges = 0, total = 0;
      for (int x : members[a])
        for (int y : members[b]) {
          ++total;
          edges += g.adjacent(x, y);
        }
      if (edges == total) {
        arc[a][b] = arc[b][a] = 1;
      } else if (edges > 0) {
        arc[a][b] = 1;
        for (int x : members[a])
          for (int y : members[b]) {
            if (g.adjacent(x, y))
              prec.add_arc(x, y);
            else
              prec.add_arc(y, x);
          }
      }
    }
  std::vector<int> rank(cc.order() + 1, 0);
  for (int u = 1; u <= cc.order(); ++u) rank[u] = group[u];
  auto order = topological_order(prec, rank);
  if (!order) {
    RawEncoding r = singleton_encoding(cc);
    r.fallbacks = 1;
    return r;
  }
  RawEncoding r;
  for (int a = 0; a < ng; ++a) r.add_letter(group_bag[a]);
  r.arc = arc;
  for (int u : *order) {
    r.word.push_back(group[u]);
    r.vertices.push_back(u);
  }
  int layers = static_cast<int>(spiral.size()) - 1;
  r.budget = k * (2 * layers + 1);
  return r;
}

// Concatenates parts in word order; arcs across parts follow the complete or
// empty adjacency between their letter classes.
RawEncoding concatenate(const ChainCircuit& cc, const std::vector<std::pair<RawEncoding, std::vector<int>>>& parts) {
  RawEncoding r;
  std::vector<std::vector<int>> letter_members;
  std::vector<int> letter_part;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& [raw, original] = parts[p];
    int offset = static_cast<int>(r.letter_bag.size());
    for (int bag : raw.letter_bag) {
      r.add_letter(bag);
      letter_members.emplace_back();
      letter_part.push_back(static_cast<int>(p));
    }
    for (std::size_t a = 0; a < raw.arc.size(); ++a)
      for (std::size_t b = 0; b < raw.arc.size(); ++b) r.arc[offset + a][offset + b] = raw.arc[a][b];
    for (std::size_t q = 0; q < raw.word.size(); ++q) {
      int vertex = original[raw.vertices[q] - 1];
      r.word.push_back(offset + raw.word[q]);
      r.vertices.push_back(vertex);
      letter_members[offset + raw.word[q]].push_back(vertex);
    }
    r.budget += raw.budget;
    r.fallbacks += raw.fallbacks;
  }
  int nl = static_cast<int>(r.letter_bag.size());
  for (int a = 0; a < nl; ++a)
    for (int b = 0; b < nl; ++b) {
      bool consecutive = cc.next(r.letter_bag[a]) == r.letter_bag[b] || cc.next(r.letter_bag[b]) == r.letter_bag[a];
      if (letter_part[a] >= letter_part[b] || !consecutive) continue;
      // a's vertices all precede b's in the word.
      int edges = 0, total = 0;
      for (int x : letter_members[a])
        for (int y : letter_members[b]) {
          ++total;
          edges += cc.graph().adjacent(x, y);
        }
      if (edges != 0 && edges != total) throw std::logic_error("letter classes from different parts are neither complete nor empty");
      r.arc[a][b] = edges == total && total > 0;
    }
  return r;
}

RawEncoding encode_raw(const ChainCircuit& cc, StepCounter& steps, bool allow_complement) {
  steps.tick();
  if (cc.order() == 0) return RawEncoding{};
  Digraph d = conflict(cc);
  std::vector<int> rank(cc.order() + 1, 0);
  for (int v = 1; v <= cc.order(); ++v) rank[v] = cc.bag_of(v) * (cc.order() + 1) + cc.position(v);
  if (auto order = topological_order(d, rank)) return base_encoding(cc, *order);

  if (auto layers = find_cycle_layers(cc, 1, steps)) {
    const auto& seed = layers->front();
    RedBlueSplit split = red_blue_split(cc, VertexSet(seed.begin(), seed.end()));
    std::vector<std::pair<RawEncoding, std::vector<int>>> parts;
    parts.emplace_back(encode_raw(split.left.circuit, steps, true), split.left.original);
    parts.emplace_back(middle_encoding(split.middle.circuit, steps), split.middle.original);
    parts.emplace_back(encode_raw(split.right.circuit, steps, true), split.right.original);
    return concatenate(cc, parts);
  }

  // The conflict digraph of the complement is this one reversed, so it is
  // cyclic too; it must contain a cycle since this circuit avoids both.
  if (!allow_complement) throw std::logic_error("circuit avoids both C_{k,1} and its complement but has a cyclic conflict digraph");
  RawEncoding r = encode_raw(cc_complement(cc), steps, false);
  int nl = static_cast<int>(r.letter_bag.size());
  for (int a = 0; a < nl; ++a)
    for (int b = 0; b < nl; ++b)
      if (cc.next(r.letter_bag[a]) == r.letter_bag[b]) {
        r.arc[a][b] ^= 1;
        r.arc[b][a] ^= 1;
      }
  return r;
}

}  // namespace

Encoding encode(const ChainCircuit& cc, Budget budget) {
  StepCounter steps(budget, "chain circuit encoding");
  RawEncoding r = encode_raw(cc, steps, true);
  // Name letters by first appearance in the word.
  int nl = static_cast<int>(r.letter_bag.size());
  std::vector<int> name(nl, -1);
  int used = 0;
  for (int a : r.word)
    if (name[a] < 0) name[a] = used++;
  std::vector<std::string> names(used);
  std::vector<int> letter_of_name(used);
  for (int a = 0; a < nl; ++a)
    if (name[a] >= 0) {
      names[name[a]] = letter_name(name[a]);
      letter_of_name[name[a]] = a;
    }
  Encoding e{Decoder(names), {}, r.vertices, used, r.budget, r.fallbacks};
  for (int x = 0; x < used; ++x)
    for (int y = 0; y < used; ++y)
      if (r.arc[letter_of_name[x]][letter_of_name[y]]) e.decoder.set_arc(x, y);
  for (int a : r.word) e.word.push_back(names[name[a]]);
  if (!encoding_matches(cc.graph(), e)) throw std::logic_error("chain circuit encoding does not reproduce the graph");
  return e;
}

bool encoding_matches(const Graph& g, const Encoding& e) {
  return represents(g, LetterRepresentation{e.decoder, e.word, e.vertices});
}

}  // namespace letgrid
