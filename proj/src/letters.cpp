#include "letgrid/letters.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <unordered_set>

namespace letgrid {

Decoder::Decoder(std::vector<std::string> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].empty()) throw InputError("empty letter token");
    if (!index_.emplace(letters_[i], static_cast<int>(i)).second) throw InputError("duplicate letter '" + letters_[i] + "'");
  }
  arcs_.assign(letters_.size() * letters_.size(), 0);
}

Decoder::Decoder(std::vector<std::string> letters, const std::vector<std::pair<std::string, std::string>>& arcs)
    : Decoder(std::move(letters)) {
  for (const auto& [a, b] : arcs) {
    int i = index_of(a), j = index_of(b);
    if (has_arc(i, j)) throw InputError("duplicate arc " + a + " -> " + b);
    set_arc(i, j);
  }
}

int Decoder::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? -1 : it->second;
}

int Decoder::index_of(std::string_view token) const {
  int i = find(token);
  if (i < 0) throw InputError("unknown letter '" + std::string(token) + "'");
  return i;
}

void Decoder::set_arc(int a, int b, bool on) {
  if (a < 0 || b < 0 || a >= size() || b >= size()) throw InputError("arc letter index out of range");
  arcs_[a * size() + b] = on;
}

std::vector<std::pair<std::string, std::string>> Decoder::arcs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (has_arc(a, b)) out.emplace_back(letters_[a], letters_[b]);
  return out;
}

std::vector<int> letter_indices(const Decoder& d, const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& t : w) out.push_back(d.index_of(t));
  return out;
}

Graph decode(const Decoder& d, const Word& w) {
  auto idx = letter_indices(d, w);
  int n = static_cast<int>(w.size());
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d.has_arc(idx[i], idx[j])) g.add_edge(i + 1, j + 1);
  return g;
}

bool verify_certificate(const Graph& g, const LetterCertificate& c, const Decoder& d) {
  int n = g.order();
  if (static_cast<int>(c.assignment.size()) != n || static_cast<int>(c.order.size()) != n)
    throw InputError("certificate does not cover the vertex set");
  std::vector<char> seen(n + 1, 0);
  for (int v : c.order) {
    if (v < 1 || v > n || seen[v]) throw InputError("certificate order is not a permutation of the vertices");
    seen[v] = 1;
  }
  std::vector<int> letter(n + 1);
  for (int v = 1; v <= n; ++v) letter[v] = d.index_of(c.assignment[v - 1]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int u = c.order[i], v = c.order[j];
      if (g.adjacent(u, v) != d.has_arc(letter[u], letter[v])) return false;
    }
  return true;
}

LetterCertificate certificate_of(const LetterRepresentation& r, int n) {
  if (static_cast<int>(r.vertices.size()) != n || r.word.size() != r.vertices.size())
    throw InputError("representation does not cover the vertex set");
  LetterCertificate c;
  c.assignment.assign(n, "");
  for (std::size_t p = 0; p < r.word.size(); ++p) {
    int v = r.vertices[p];
    if (v < 1 || v > n) throw InputError("representation vertex out of range");
    c.assignment[v - 1] = r.word[p];
  }
  c.order = r.vertices;
  return c;
}

bool represents(const Graph& g, const LetterRepresentation& r) {
  if (r.word.size() != r.vertices.size() || static_cast<int>(r.word.size()) != g.order()) return false;
  return verify_certificate(g, certificate_of(r, g.order()), r.decoder);
}

std::string letter_name(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

namespace {

// Left-to-right placement of (vertex, letter) pairs. With a fixed decoder the
// arcs are known; otherwise they start unknown and are fixed by the first
// pair of positions that needs them. Failed states are remembered by their
// letter classes and arc table, which is all the future depends on.
class WordSearch {
 public:
  WordSearch(const Graph& g, int k, const Decoder* fixed, StepCounter& steps)
      : n_(g.order()), k_(k), fixed_(fixed != nullptr), steps_(steps) {
    if (n_ > 64) throw InputError("word search is limited to 64 vertices");
    for (int v = 1; v <= n_; ++v) nb_.push_back(g.mask(v));
    cls_.assign(k_, 0);
    arc_.assign(k_ * k_, -1);
    if (fixed_)
      for (int a = 0; a < k_; ++a)
        for (int b = 0; b < k_; ++b) arc_[a * k_ + b] = fixed->has_arc(a, b);
    used_ = fixed_ ? k_ : 0;
    all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  bool run() {
    if (!class_feasible()) return false;
    return dfs();
  }

  const std::vector<int>& order() const { return order_; }
  const std::vector<int>& letters() const { return letters_; }
  bool arc_known(int a, int b) const { return arc_[a * k_ + b] >= 0; }
  bool arc(int a, int b) const { return arc_[a * k_ + b] == 1; }

 private:
  bool dfs() {
    if (placed_ == all_) return true;
    steps_.tick();
    std::string key = state_key();
    if (failed_.count(key)) return false;
    int letter_limit = fixed_ ? k_ : std::min(used_ + 1, k_);
    for (int l = 0; l < letter_limit; ++l) {
      for (int v = 0; v < n_; ++v) {
        if (placed_ >> v & 1U) continue;
        std::size_t mark = trail_.size();
        if (place(v, l)) {
          if (dfs()) return true;
          unplace(v, l);
        }
        undo(mark);
      }
    }
    if (failed_.size() < kMemoLimit) failed_.insert(std::move(key));
    return false;
  }

  bool set_arc(int a, int b, bool x) {
    auto& s = arc_[a * k_ + b];
    if (s < 0) {
      s = x;
      trail_.push_back(a * k_ + b);
      return true;
    }
    return s == static_cast<int>(x);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      arc_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  bool place(int v, int l) {
    for (int b = 0; b < used_; ++b) {
      if (!cls_[b]) continue;
      std::uint64_t inter = nb_[v] & cls_[b];
      if (inter != 0 && inter != cls_[b]) return false;
      if (!set_arc(b, l, inter != 0)) return false;
    }
    cls_[l] |= std::uint64_t{1} << v;
    placed_ |= std::uint64_t{1} << v;
    order_.push_back(v);
    letters_.push_back(l);
    int saved_used = used_;
    if (l == used_) ++used_;
    if (!class_feasible()) {
      used_ = saved_used;
      unplace_raw(v, l);
      return false;
    }
    return true;
  }

  void unplace(int v, int l) {
    if (!fixed_ && l == used_ - 1 && cls_[l] == (std::uint64_t{1} << v)) --used_;
    unplace_raw(v, l);
  }

  void unplace_raw(int v, int l) {
    cls_[l] &= ~(std::uint64_t{1} << v);
    placed_ &= ~(std::uint64_t{1} << v);
    order_.pop_back();
    letters_.pop_back();
  }

  // Every unplaced vertex must see each letter class uniformly and still have
  // some letter whose known arcs agree with what it sees.
  bool class_feasible() const {
    for (int w = 0; w < n_; ++w) {
      if (placed_ >> w & 1U) continue;
      for (int b = 0; b < used_; ++b) {
        std::uint64_t inter = nb_[w] & cls_[b];
        if (inter != 0 && inter != cls_[b]) return false;
      }
      if (!fixed_ && used_ < k_) continue;
      bool some = false;
      for (int l = 0; l < k_ && !some; ++l) {
        bool ok = true;
        for (int b = 0; b < used_ && ok; ++b) {
          if (!cls_[b]) continue;
          int s = arc_[b * k_ + l];
          if (s >= 0 && s != static_cast<int>((nb_[w] & cls_[b]) != 0)) ok = false;
        }
        some = ok;
      }
      if (!some) return false;
    }
    return true;
  }

  std::string state_key() const {
    std::string key(reinterpret_cast<const char*>(cls_.data()), cls_.size() * sizeof(std::uint64_t));
    if (!fixed_) key.append(arc_.begin(), arc_.end());
    return key;
  }

  static constexpr std::size_t kMemoLimit = 4'000'000;

  int n_, k_;
  bool fixed_;
  StepCounter& steps_;
  std::vector<std::uint64_t> nb_, cls_;
  std::vector<signed char> arc_;
  std::vector<int> trail_;
  std::vector<int> order_, letters_;
  std::uint64_t placed_ = 0, all_ = 0;
  int used_ = 0;
  std::unordered_set<std::string> failed_;
};

LetterRepresentation one_letter_per_vertex(const Graph& g) {
  int n = g.order();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(letter_name(i));
  LetterRepresentation r{Decoder(names), names, {}};
  for (int v = 1; v <= n; ++v) r.vertices.push_back(v);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (g.adjacent(i, j)) r.decoder.set_arc(i - 1, j - 1);
  return r;
}

}  // namespace

std::optional<LetterRepresentation> recognize_with_vertices(const Decoder& d, const Graph& g, Budget budget) {
  if (g.order() == 0) return LetterRepresentation{d, {}, {}};
  if (d.size() == 0) return std::nullopt;
  StepCounter steps(budget, "recognition");
  WordSearch s(g, d.size(), &d, steps);
  if (!s.run()) return std::nullopt;
  LetterRepresentation r{d, {}, {}};
  for (std::size_t p = 0; p < s.order().size(); ++p) {
    r.word.push_back(d.letter(s.letters()[p]));
    r.vertices.push_back(s.order()[p] + 1);
  }
  return r;
}

std::optional<Word> recognize(const Decoder& d, const Graph& g, Budget budget) {
  auto r = recognize_with_vertices(d, g, budget);
  if (!r) return std::nullopt;
  return r->word;
}

namespace {

std::optional<LetterRepresentation> search_k(const Graph& g, int k, StepCounter& steps) {
  int n = g.order();
  if (n == 0) return LetterRepresentation{};
  if (k >= n) return one_letter_per_vertex(g);
  if (k <= 0) return std::nullopt;
  WordSearch s(g, k, nullptr, steps);
  if (!s.run()) return std::nullopt;
  int used = 0;
  for (int l : s.letters()) used = std::max(used, l + 1);
  std::vector<std::string> names;
  for (int i = 0; i < used; ++i) names.push_back(letter_name(i));
  LetterRepresentation r{Decoder(names), {}, {}};
  // Arcs never forced by a pair of positions are left absent.
  for (int a = 0; a < used; ++a)
    for (int b = 0; b < used; ++b)
      if (s.arc_known(a, b) && s.arc(a, b)) r.decoder.set_arc(a, b);
  for (std::size_t p = 0; p < s.order().size(); ++p) {
    r.word.push_back(names[s.letters()[p]]);
    r.vertices.push_back(s.order()[p] + 1);
  }
  return r;
}

}  // namespace

std::optional<LetterRepresentation> k_letter_representation(const Graph& g, int k, Budget budget) {
  StepCounter steps(budget, "k-letter search");
  return search_k(g, k, steps);
}

LettericityResult lettericity(const Graph& g, Budget budget) {
  int n = g.order();
  LettericityResult res;
  if (n == 0) {
    res.exact = true;
    res.witness = LetterRepresentation{};
    return res;
  }
  int lower = n <= 20 ? cochromatic_number(g) : 1;
  res.upper = n;
  StepCounter steps(budget, "lettericity");
  for (int k = lower; k <= n; ++k) {
    res.lower = k;
    try {
      if (auto w = search_k(g, k, steps)) {
        res.upper = k;
        res.exact = true;
        res.witness = std::move(w);
        return res;
      }
    } catch (const BudgetExhausted&) {
      return res;
    }
  }
  throw std::logic_error("lettericity search missed the one-letter-per-vertex representation");
}

std::optional<std::vector<int>> subword_leq(const Word& w1, const Word& w2) {
  std::vector<int> emb;
  std::size_t j = 0;
  for (const auto& s : w1) {
    while (j < w2.size() && w2[j] != s) ++j;
    if (j == w2.size()) return std::nullopt;
    emb.push_back(static_cast<int>(++j));
  }
  return emb;
}

std::vector<Graph> minimal_obstructions(int k, int n_max) {
  if (k < 1) throw InputError("k must be at least 1");
  if (n_max > 7) throw InputError("obstruction enumeration is limited to 7 vertices");
  std::map<std::string, bool> member;
  std::vector<Graph> out;
  auto in_lk = [&](const Graph& g) {
    if (g.order() <= k) return true;
    if (cochromatic_number(g) > k) return false;
    StepCounter steps(Budget{});
    return search_k(g, k, steps).has_value();
  };
  for (int n = 1; n <= n_max; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      std::string key = canonical_key(g);
      bool in = in_lk(g);
      member[key] = in;
      if (in) continue;
      bool minimal = true;
      for (int v = 1; v <= n && minimal; ++v) {
        VertexSet rest;
        for (int u = 1; u <= n; ++u)
          if (u != v) rest.push_back(u);
        Graph h = induced_subgraph(g, rest);
        if (h.order() == 0) continue;
        auto it = member.find(canonical_key(h));
        minimal = it != member.end() && it->second;
      }
      if (minimal) out.push_back(g);
    }
  }
  return out;
}

Decoder parse_decoder(std::string_view text) {
  auto lines = tokenize_lines(text);
  if (lines.empty() || lines[0][0] != "letters") throw InputError("decoder text must start with 'letters'");
  Decoder d(std::vector<std::string>(lines[0].begin() + 1, lines[0].end()));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l[0] != "arc" || l.size() != 3) throw InputError("expected 'arc <a> <b>' on decoder line " + std::to_string(i + 1));
    int a = d.index_of(l[1]), b = d.index_of(l[2]);
    if (d.has_arc(a, b)) throw InputError("duplicate arc " + l[1] + " -> " + l[2]);
    d.set_arc(a, b);
  }
  return d;
}

std::string format_decoder(const Decoder& d) {
  std::ostringstream out;
  out << "letters";
  for (const auto& l : d.letters()) out << " " << l;
  out << "\n";
  for (const auto& [a, b] : d.arcs()) out << "arc " << a << " " << b << "\n";
  return out.str();
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string t;
  while (in >> t) w.push_back(t);
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out;
}

}  // namespace letgrid
