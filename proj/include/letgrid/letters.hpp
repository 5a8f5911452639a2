#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "letgrid/budget.hpp"
#include "letgrid/graph.hpp"

namespace letgrid {

// Alphabet of distinct tokens plus a set of ordered pairs (loops allowed).
class Decoder {
 public:
  Decoder() = default;
  explicit Decoder(std::vector<std::string> letters);
  Decoder(std::vector<std::string> letters, const std::vector<std::pair<std::string, std::string>>& arcs);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::vector<std::string>& letters() const { return letters_; }
  const std::string& letter(int i) const { return letters_.at(i); }
  // Index of a token, or -1.
  int find(std::string_view token) const;
  int index_of(std::string_view token) const;

  bool has_arc(int a, int b) const { return arcs_[a * size() + b]; }
  bool has_arc(std::string_view a, std::string_view b) const { return has_arc(index_of(a), index_of(b)); }
  void set_arc(int a, int b, bool on = true);
  void add_arc(std::string_view a, std::string_view b) { set_arc(index_of(a), index_of(b)); }
  std::vector<std::pair<std::string, std::string>> arcs() const;

  bool operator==(const Decoder& o) const { return letters_ == o.letters_ && arcs_ == o.arcs_; }

 private:
  std::vector<std::string> letters_;
  std::unordered_map<std::string, int> index_;
  std::vector<char> arcs_;
};

using Word = std::vector<std::string>;

// Letter per vertex (assignment[v-1]) and a total order of the vertices.
struct LetterCertificate {
  std::vector<std::string> assignment;
  std::vector<int> order;
};

// A word together with the graph vertex sitting at each position.
struct LetterRepresentation {
  Decoder decoder;
  Word word;
  std::vector<int> vertices;
};

Graph decode(const Decoder& d, const Word& w);
std::vector<int> letter_indices(const Decoder& d, const Word& w);

bool verify_certificate(const Graph& g, const LetterCertificate& c, const Decoder& d);
LetterCertificate certificate_of(const LetterRepresentation& r, int n);
// decode(r.decoder, r.word) equals g once position p is renamed r.vertices[p-1].
bool represents(const Graph& g, const LetterRepresentation& r);

// Lexicographically least word (letters compared by decoder position) whose
// decoding is isomorphic to g.
std::optional<Word> recognize(const Decoder& d, const Graph& g, Budget budget = {});
// Same search, also reporting which vertex of g sits at each position.
std::optional<LetterRepresentation> recognize_with_vertices(const Decoder& d, const Graph& g, Budget budget = {});

struct LettericityResult {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  // Present when exact.
  std::optional<LetterRepresentation> witness;
  int value() const { return lower; }
};

inline constexpr int kLettericityDeskBound = 10;

LettericityResult lettericity(const Graph& g, Budget budget = {});
// A representation with at most k letters, or nullopt; throws BudgetExhausted.
std::optional<LetterRepresentation> k_letter_representation(const Graph& g, int k, Budget budget = {});

// Greedy leftmost increasing injection (1-based positions of w2).
std::optional<std::vector<int>> subword_leq(const Word& w1, const Word& w2);

std::vector<Graph> minimal_obstructions(int k, int n_max);

Decoder parse_decoder(std::string_view text);
std::string format_decoder(const Decoder& d);
Word parse_word(std::string_view text);
std::string format_word(const Word& w);
// Standard token for the i-th letter (0-based): a, b, ..., z, then x27, x28, ...
std::string letter_name(int i);

}  // namespace letgrid
