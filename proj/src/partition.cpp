#include "letgrid/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "letgrid/digraph.hpp"

namespace letgrid {

namespace {

void check_cover(int n, const std::vector<std::vector<int>>& bags) {
  std::vector<char> seen(n + 1, 0);
  for (const auto& b : bags)
    for (int v : b) {
      if (v < 1 || v > n) throw InputError("bag vertex " + std::to_string(v) + " out of range");
      if (seen[v]) throw InputError("vertex " + std::to_string(v) + " lies in two bags");
      seen[v] = 1;
    }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw InputError("vertex " + std::to_string(v) + " is in no bag");
}

// -1: N_b(u) strictly inside N_b(v); 1: strictly contains; 0: equal; 2: incomparable.
int compare_toward(const Graph& g, int u, int v, const std::vector<int>& b) {
  bool u_extra = false, v_extra = false;
  for (int w : b) {
    bool a = g.adjacent(u, w), c = g.adjacent(v, w);
    u_extra |= a && !c;
    v_extra |= c && !a;
  }
  if (u_extra && v_extra) return 2;
  return u_extra ? 1 : v_extra ? -1 : 0;
}

struct Direction {
  bool inc = true, dec = true;
};

// Which monotone directions the stored order of bag a has toward bag b.
Direction stored_direction(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  Direction d;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    int c = compare_toward(g, a[i], a[i + 1], b);
    if (c == 2) return {false, false};
    if (c == 1) d.inc = false;
    if (c == -1) d.dec = false;
  }
  return d;
}

std::optional<int> declared_sign(const PartitionCertificate& cert, int a, int b) {
  for (auto [x, y, s] : cert.signs)
    if (x == a && y == b) return s;
  return std::nullopt;
}

std::string bag_label(const PartitionCertificate& cert, int i) {
  return i < static_cast<int>(cert.names.size()) ? cert.names[i] : std::to_string(i + 1);
}

}  // namespace

PartitionCheck check_partition(const Graph& g, const PartitionCertificate& cert, PartitionLevel level) {
  check_cover(g.order(), cert.bags);
  int t = static_cast<int>(cert.bags.size());
  for (auto [a, b, s] : cert.signs)
    if (a < 0 || a >= t || b < 0 || b >= t || a == b || (s != 1 && s != -1)) throw InputError("malformed sign entry");
  auto fail = [&](int a, int b, std::string why) { return PartitionCheck{false, a, b, std::move(why)}; };

  for (int a = 0; a < t; ++a)
    if (!is_homogeneous(g, cert.bags[a])) return fail(a, -1, "bag " + bag_label(cert, a) + " is neither a clique nor independent");
  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b)
      if (!is_chain_pair(g, cert.bags[a], cert.bags[b]))
        return fail(a, b, "bags " + bag_label(cert, a) + " and " + bag_label(cert, b) + " contain an induced 2K2");
  if (level == PartitionLevel::chain) return {};

  // allowed[a][b]: directions usable for bag a toward bag b.
  std::vector<std::vector<Direction>> allowed(t, std::vector<Direction>(t));
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) {
      if (a == b) continue;
      Direction d = stored_direction(g, cert.bags[a], cert.bags[b]);
      if (auto s = declared_sign(cert, a, b)) {
        if (*s == 1) d.dec = false;
        if (*s == -1) d.inc = false;
      }
      if (!d.inc && !d.dec)
        return fail(a, b, "order of bag " + bag_label(cert, a) + " is not monotone (in the declared direction) toward bag " +
                              bag_label(cert, b));
      allowed[a][b] = d;
    }
  if (level == PartitionLevel::semi) return {};

  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b) {
      const auto& x = allowed[a][b];
      const auto& y = allowed[b][a];
      if (!(x.inc && y.dec) && !(x.dec && y.inc))
        return fail(a, b, "bags " + bag_label(cert, a) + " and " + bag_label(cert, b) + " do not have exactly one increasing side");
    }
  return {};
}

namespace {

// A binary choice fixing signs on one or two bag sides. Each side lists the
// precedences (u before v) that hold when its sign is +; sign - reverses them.
struct Side {
  int bag, other;
  std::vector<std::pair<int, int>> inc;
};
struct Choice {
  std::vector<Side> sides;  // bit 0: first side +, second -; bit 1: reversed
};

std::vector<std::pair<int, int>> strict_inclusions(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::pair<int, int>> out;
  for (int u : a)
    for (int v : a)
      if (u != v && compare_toward(g, u, v, b) == -1) out.emplace_back(u, v);
  return out;
}

class OrderSearch {
 public:
  OrderSearch(const Graph& g, std::vector<Choice> choices)
      : g_(g), choices_(std::move(choices)), bit_(choices_.size(), 0) {}

  bool run() { return assign(0); }

  // Arcs currently constraining bag b.
  Digraph bag_digraph(int b, std::size_t upto) const {
    Digraph d(g_.order());
    for (std::size_t c = 0; c < upto; ++c)
      for (std::size_t s = 0; s < choices_[c].sides.size(); ++s) {
        const Side& side = choices_[c].sides[s];
        if (side.bag != b) continue;
        bool plus = (s == 0) == (bit_[c] == 0);
        for (auto [u, v] : side.inc) {
          if (plus)
            d.add_arc(u, v);
          else
            d.add_arc(v, u);
        }
      }
    return d;
  }

  bool sign_plus(std::size_t c, std::size_t s) const { return (s == 0) == (bit_[c] == 0); }

 private:
  bool assign(std::size_t c) {
    if (c == choices_.size()) return true;
    for (int bit = 0; bit < 2; ++bit) {
      bit_[c] = bit;
      bool ok = true;
      for (const auto& side : choices_[c].sides)
        if (!topological_order(bag_digraph(side.bag, c + 1))) {
          ok = false;
          break;
        }
      if (ok && assign(c + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Choice> choices_;
  std::vector<int> bit_;
};

}  // namespace

std::optional<PartitionCertificate> order_bags(const Graph& g, const std::vector<std::vector<int>>& bags,
                                               PartitionLevel level) {
  PartitionCertificate cert;
  cert.bags = bags;
  for (std::size_t i = 0; i < bags.size(); ++i) cert.names.push_back("A" + std::to_string(i + 1));
  if (!check_partition(g, cert, PartitionLevel::chain)) return std::nullopt;
  int t = static_cast<int>(bags.size());
  if (level == PartitionLevel::chain) return cert;

  // Sides whose neighbourhoods are all equal accept either sign; they still
  // get a declared sign so the certificate is explicit.
  std::vector<Choice> choices;
  std::vector<std::tuple<int, int, int>> fixed;
  if (level == PartitionLevel::semi) {
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b) {
        if (a == b) continue;
        auto inc = strict_inclusions(g, bags[a], bags[b]);
        if (inc.empty())
          fixed.emplace_back(a, b, 1);
        else
          choices.push_back(Choice{{Side{a, b, std::move(inc)}}});
      }
  } else {
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b) {
        auto ia = strict_inclusions(g, bags[a], bags[b]);
        auto ib = strict_inclusions(g, bags[b], bags[a]);
        if (ia.empty() && ib.empty()) {
          fixed.emplace_back(a, b, 1);
          fixed.emplace_back(b, a, -1);
        } else {
          choices.push_back(Choice{{Side{a, b, std::move(ia)}, Side{b, a, std::move(ib)}}});
        }
      }
  }
  OrderSearch search(g, choices);
  if (!search.run()) return std::nullopt;
  for (int b = 0; b < t; ++b) {
    Digraph d = search.bag_digraph(b, choices.size());
    std::vector<int> rank(g.order() + 1, 0);
    for (std::size_t p = 0; p < bags[b].size(); ++p) rank[bags[b][p]] = static_cast<int>(p);
    auto order = topological_order(d, rank);
    cert.bags[b].clear();
    for (int v : *order)
      if (std::find(bags[b].begin(), bags[b].end(), v) != bags[b].end()) cert.bags[b].push_back(v);
  }
  cert.signs = fixed;
  for (std::size_t c = 0; c < choices.size(); ++c)
    for (std::size_t s = 0; s < choices[c].sides.size(); ++s)
      cert.signs.emplace_back(choices[c].sides[s].bag, choices[c].sides[s].other, search.sign_plus(c, s) ? 1 : -1);
  std::sort(cert.signs.begin(), cert.signs.end());
  if (!check_partition(g, cert, level)) throw std::logic_error("constructed bag orders fail the partition check");
  return cert;
}

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, PartitionLevel level, int max_bags, StepCounter& steps)
      : g_(g), level_(level), max_bags_(max_bags), steps_(steps) {}

  bool run() { return place(1); }
  const PartitionCertificate& witness() const { return witness_; }

 private:
  bool fits(int v, int b) const {
    const auto& bag = bags_[b];
    if (bag.size() >= 2) {
      bool clique = g_.adjacent(bag[0], bag[1]);
      for (int u : bag)
        if (g_.adjacent(u, v) != clique) return false;
    }
    // An induced 2K2 across bags b and c shows up as incomparable
    // neighbourhoods of two vertices of b toward c.
    for (std::size_t c = 0; c < bags_.size(); ++c) {
      if (static_cast<int>(c) == b || bags_[c].empty()) continue;
      for (int u : bag)
        if (compare_toward(g_, u, v, bags_[c]) == 2) return false;
    }
    return true;
  }

  bool place(int v) {
    steps_.tick();
    if (v > g_.order()) {
      if (level_ == PartitionLevel::chain) {
        witness_.bags = bags_;
        witness_.names.clear();
        for (std::size_t i = 0; i < bags_.size(); ++i) witness_.names.push_back("A" + std::to_string(i + 1));
        return true;
      }
      auto cert = order_bags(g_, bags_, level_);
      if (!cert) return false;
      witness_ = *cert;
      return true;
    }
    for (std::size_t b = 0; b < bags_.size(); ++b) {
      if (!fits(v, static_cast<int>(b))) continue;
      bags_[b].push_back(v);
      if (place(v + 1)) return true;
      bags_[b].pop_back();
    }
    if (static_cast<int>(bags_.size()) < max_bags_) {
      bags_.push_back({v});
      if (place(v + 1)) return true;
      bags_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  PartitionLevel level_;
  int max_bags_;
  StepCounter& steps_;
  std::vector<std::vector<int>> bags_;
  PartitionCertificate witness_;
};

}  // namespace

ParameterResult chain_parameter(const Graph& g, PartitionLevel level, Budget budget) {
  int bound = level == PartitionLevel::chain ? kGammaDeskBound : kSigmaDeskBound;
  if (g.order() > bound)
    throw InputError("exact partition parameters are limited to " + std::to_string(bound) + " vertices at this level");
  if (g.order() == 0) return {};
  StepCounter steps(budget, "partition parameter search");
  for (int t = 1; t <= g.order(); ++t) {
    PartitionSearch s(g, level, t, steps);
    if (s.run()) return {t, s.witness()};
  }
  throw std::logic_error("singleton bags always form a valid partition");
}

int gamma(const Graph& g, Budget budget) { return chain_parameter(g, PartitionLevel::chain, budget).value; }
int sigma(const Graph& g, Budget budget) { return chain_parameter(g, PartitionLevel::semi, budget).value; }
int lambda(const Graph& g, Budget budget) { return chain_parameter(g, PartitionLevel::proper, budget).value; }

LinkedChainGraph linked_chain(const Permutation& pi) {
  int n = pi.size();
  if (n < 1) throw InputError("linking permutation must be non-empty");
  LinkedChainGraph lcg{n, Graph(3 * n), {}, {}, {}, pi};
  auto inv = pi.inverse();
  for (int i = 1; i <= n; ++i) {
    lcg.a.push_back(i);
    lcg.b.push_back(n + i);
    lcg.c.push_back(2 * n + i);
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= j; ++i) lcg.graph.add_edge(n + j, i);
    for (int c = inv(j); c <= n; ++c) lcg.graph.add_edge(n + j, 2 * n + c);
  }
  return lcg;
}

bool check_canonical_semi(const LinkedChainGraph& lcg) {
  return order_bags(lcg.graph, {lcg.a, lcg.b, lcg.c}, PartitionLevel::semi).has_value();
}

bool pattern_monotone_containment(const Permutation& pi, const LinkedChainGraph& sub) {
  return contains_pattern(pi, sub.pi).has_value();
}

std::optional<ApGridWitness> ap_grid_search(const Colouring& c, int k) {
  int n = c.n;
  if (k < 1) throw InputError("progression length must be at least 1");
  std::vector<std::vector<int>> aps;
  for (int start = 1; start <= n; ++start)
    for (int diff = 1; start + (k - 1) * diff <= n; ++diff) {
      std::vector<int> ap;
      for (int i = 0; i < k; ++i) ap.push_back(start + i * diff);
      aps.push_back(std::move(ap));
      if (k == 1) break;
    }
  for (const auto& x : aps)
    for (const auto& y : aps) {
      const std::string& col = c.colour[x[0] - 1][y[0] - 1];
      bool mono = true;
      for (int a : x) {
        for (int b : y)
          if (c.colour[a - 1][b - 1] != col) {
            mono = false;
            break;
          }
        if (!mono) break;
      }
      if (mono) return ApGridWitness{x, y, col};
    }
  return std::nullopt;
}

PartitionCertificate parse_certificate(std::string_view text) {
  PartitionCertificate cert;
  std::map<std::string, int> index;
  std::vector<std::vector<std::string>> sign_lines;
  for (const auto& l : tokenize_lines(text)) {
    if (l[0] == "bag") {
      if (l.size() < 3 || l[2] != ":") throw InputError("expected 'bag <name> : <vertices>'");
      if (index.count(l[1])) throw InputError("bag " + l[1] + " listed twice");
      index[l[1]] = static_cast<int>(cert.bags.size());
      cert.names.push_back(l[1]);
      cert.bags.emplace_back();
      for (std::size_t i = 3; i < l.size(); ++i) cert.bags.back().push_back(parse_int(l[i], "bag vertex"));
    } else if (l[0] == "sign") {
      sign_lines.push_back(l);
    } else {
      throw InputError("unexpected line starting with '" + l[0] + "' in certificate");
    }
  }
  for (const auto& l : sign_lines) {
    if (l.size() != 4 || (l[3] != "+" && l[3] != "-")) throw InputError("expected 'sign <bag> <bag> +|-'");
    auto a = index.find(l[1]), b = index.find(l[2]);
    if (a == index.end() || b == index.end()) throw InputError("sign line names an unknown bag");
    cert.signs.emplace_back(a->second, b->second, l[3] == "+" ? 1 : -1);
  }
  return cert;
}

std::string format_certificate(const PartitionCertificate& cert) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cert.bags.size(); ++i) {
    out << "bag " << bag_label(cert, static_cast<int>(i)) << " :";
    for (int v : cert.bags[i]) out << " " << v;
    out << "\n";
  }
  for (auto [a, b, s] : cert.signs) out << "sign " << bag_label(cert, a) << " " << bag_label(cert, b) << " " << (s > 0 ? "+" : "-") << "\n";
  return out.str();
}

Colouring parse_colouring(std::string_view text) {
  auto lines = tokenize_lines(text);
  if (lines.empty() || lines[0].size() != 2) throw InputError("colouring must start with 'N k'");
  Colouring c;
  c.n = parse_int(lines[0][0], "grid size");
  c.k = parse_int(lines[0][1], "progression length");
  if (c.n < 1) throw InputError("grid size must be positive");
  if (static_cast<int>(lines.size()) != c.n + 1) throw InputError("colouring needs exactly N rows");
  for (int r = 1; r <= c.n; ++r) {
    if (static_cast<int>(lines[r].size()) != c.n) throw InputError("colouring row " + std::to_string(r) + " needs N entries");
    c.colour.push_back(lines[r]);
  }
  return c;
}

}  // namespace letgrid
