#include <doctest.h>

#include <random>

#include "letgrid/letters.hpp"
#include "oracles.hpp"

using namespace letgrid;

namespace {

Decoder fig1_decoder() {
  return Decoder({"a", "b", "c", "d"},
                 {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"a", "c"}, {"a", "d"}, {"d", "a"}, {"b", "d"}, {"d", "c"}});
}

Decoder single_arc() { return Decoder({"a", "b"}, {{"a", "b"}}); }

Decoder random_decoder(int k, std::mt19937_64& rng) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(letter_name(i));
  Decoder d(names);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (rng() % 2) d.set_arc(a, b);
  return d;
}

Word random_word(const Decoder& d, int n, std::mt19937_64& rng) {
  Word w;
  for (int i = 0; i < n; ++i) w.push_back(d.letter(static_cast<int>(rng() % d.size())));
  return w;
}

// Lettericity by decoding every word under every decoder; exact up to kmax letters.
struct LetterOracle {
  std::vector<std::vector<std::set<std::uint64_t>>> classes;  // [n][k]
  explicit LetterOracle(int nmax, int kmax) : classes(nmax + 1) {
    for (int n = 1; n <= nmax; ++n) {
      classes[n].resize(kmax + 1);
      for (int k = 1; k <= kmax; ++k) classes[n][k] = oracle::letter_graph_classes(n, k);
    }
  }
  // Least k <= kmax representing g, or kmax + 1.
  int value(const Graph& g) const {
    auto key = oracle::canonical_mask(g);
    const auto& byk = classes[g.order()];
    for (std::size_t k = 1; k < byk.size(); ++k)
      if (byk[k].count(key)) return static_cast<int>(k);
    return static_cast<int>(byk.size());
  }
};

const LetterOracle& letter_oracle() {
  static const LetterOracle o(6, 3);
  return o;
}

}  // namespace

TEST_SUITE("letters") {
  TEST_CASE("decoding the six-letter word of the four-letter example decoder") {
    Graph g = decode(fig1_decoder(), parse_word("a c d b a d"));
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {3, 5}, {4, 6}, {5, 6}});
  }

  TEST_CASE("alternating word decodes to the prime chain graph") {
    for (int n = 1; n <= 5; ++n) {
      Word w;
      for (int i = 0; i < n; ++i) {
        w.push_back("a");
        w.push_back("b");
      }
      Graph g = decode(single_arc(), w);
      CHECK(g.size() == n * (n + 1) / 2);
      // Position 2i-1 (an a) sees exactly the b's at positions 2j with j >= i.
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) CHECK(g.adjacent(2 * i - 1, 2 * j) == (j >= i));
      VertexSet odd, even;
      for (int i = 1; i <= n; ++i) {
        odd.push_back(2 * i - 1);
        even.push_back(2 * i);
      }
      CHECK(is_chain_pair(g, odd, even));
    }
  }

  TEST_CASE("empty word and unknown symbols") {
    CHECK(decode(fig1_decoder(), {}).order() == 0);
    CHECK_THROWS_AS(decode(fig1_decoder(), {"a", "z"}), InputError);
  }

  TEST_CASE("certificates") {
    Graph p4(4, {{2, 1}, {1, 4}, {4, 3}});
    CHECK(verify_certificate(p4, {{"a", "b", "a", "b"}, {1, 2, 3, 4}}, single_arc()));
    Graph k3 = generate(GraphFamily::complete, 3);
    Decoder loop({"a"}, {{"a", "a"}});
    CHECK(verify_certificate(k3, {{"a", "a", "a"}, {3, 1, 2}}, loop));
    Graph two_k2 = generate(GraphFamily::matching, 2);
    CHECK_FALSE(verify_certificate(two_k2, {{"a", "b", "a", "b"}, {1, 2, 3, 4}}, single_arc()));
    CHECK_THROWS_AS(verify_certificate(two_k2, {{"a", "b", "a"}, {1, 2, 3}}, single_arc()), InputError);
  }

  TEST_CASE("recognition under a fixed decoder") {
    Graph k22 = generate(GraphFamily::cycle, 4);
    CHECK(recognize(single_arc(), k22) == Word{"a", "a", "b", "b"});
    CHECK_FALSE(recognize(single_arc(), generate(GraphFamily::matching, 2)));
    CHECK(recognize(single_arc(), Graph(0)) == Word{});
    auto r = recognize_with_vertices(fig1_decoder(), decode(fig1_decoder(), parse_word("a c d b a d")));
    REQUIRE(r);
    CHECK(represents(decode(fig1_decoder(), parse_word("a c d b a d")), *r));
  }

  TEST_CASE("small lettericity values") {
    auto r = lettericity(generate(GraphFamily::matching, 3));
    CHECK(r.exact);
    CHECK(r.value() == 3);
    CHECK(lettericity(generate(GraphFamily::complete, 5)).value() == 1);
    CHECK(lettericity(generate(GraphFamily::path, 4)).value() == 2);
    CHECK(lettericity(Graph(0)).value() == 0);
  }

  TEST_CASE("lettericity matches exhaustive decoding on every graph up to order 6") {
    const auto& o = letter_oracle();
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : oracle::all_graphs(n)) {
        auto r = lettericity(g);
        REQUIRE(r.exact);
        int expect = o.value(g);
        if (expect <= 3) {
          REQUIRE(r.value() == expect);
        } else {
          REQUIRE(r.value() >= 4);
        }
        REQUIRE(r.witness);
        CHECK(represents(g, *r.witness));
        CHECK(r.witness->decoder.size() == r.value());
      }
  }

  TEST_CASE("lettericity lies between the cochromatic number and the order") {
    std::mt19937_64 rng(41);
    for (int n = 7; n <= 8; ++n)
      for (int round = 0; round < 25; ++round) {
        Graph g(n);
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j)
            if (rng() % 2) g.add_edge(i, j);
        auto r = lettericity(g);
        REQUIRE(r.exact);
        CHECK(r.value() >= oracle::cochromatic(g));
        CHECK(r.value() <= n);
        CHECK(represents(g, *r.witness));
      }
  }

  TEST_CASE("a tiny budget leaves an honest interval") {
    auto r = lettericity(generate(GraphFamily::matching, 4), Budget::steps(5));
    CHECK_FALSE(r.exact);
    CHECK(r.lower <= 4);
    CHECK(r.upper >= 4);
    CHECK_THROWS_AS(recognize(single_arc(), generate(GraphFamily::cycle, 8), Budget::steps(1)), BudgetExhausted);
  }

  TEST_CASE("subword order") {
    CHECK(subword_leq({"a", "b"}, {"a", "c", "d", "b"}) == std::vector<int>{1, 4});
    CHECK(subword_leq({}, {"a"}) == std::vector<int>{});
    CHECK_FALSE(subword_leq({"b", "a"}, {"a", "b"}));
  }

  TEST_CASE("subwords decode to induced subgraphs") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 500; ++round) {
      Decoder d = random_decoder(1 + round % 4, rng);
      Word big = random_word(d, 1 + static_cast<int>(rng() % 12), rng);
      Word small;
      for (const auto& s : big)
        if (rng() % 2) small.push_back(s);
      auto emb = subword_leq(small, big);
      REQUIRE(emb);
      for (std::size_t i = 0; i < small.size(); ++i) CHECK(big[(*emb)[i] - 1] == small[i]);
      CHECK(decode(d, small) == induced_subgraph(decode(d, big), *emb));
    }
  }

  TEST_CASE("letter graph classes are hereditary") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 150; ++round) {
      Decoder d = random_decoder(1 + round % 3, rng);
      Word w = random_word(d, 1 + static_cast<int>(rng() % 8), rng);
      Graph g = decode(d, w);
      VertexSet u;
      for (int v = 1; v <= g.order(); ++v)
        if (rng() % 2) u.push_back(v);
      Graph h = induced_subgraph(g, u);
      auto found = recognize(d, h);
      REQUIRE(found);
      CHECK(oracle::isomorphic(decode(d, *found), h));
    }
  }

  TEST_CASE("equal letters give homogeneous position sets") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 200; ++round) {
      Decoder d = random_decoder(3, rng);
      Word w = random_word(d, 9, rng);
      Graph g = decode(d, w);
      CHECK(g.order() == 9);
      for (int a = 0; a < 3; ++a) {
        VertexSet pos;
        for (int i = 0; i < 9; ++i)
          if (w[i] == d.letter(a)) pos.push_back(i + 1);
        CHECK(is_homogeneous(g, pos));
        if (pos.size() >= 2) {
          CHECK(g.adjacent(pos[0], pos[1]) == d.has_arc(a, a));
        }
      }
    }
  }

  TEST_CASE("obstructions for one letter") {
    auto obs = minimal_obstructions(1, 3);
    REQUIRE(obs.size() == 2);
    Graph p3 = generate(GraphFamily::path, 3);
    Graph k2k1(3, {{1, 2}});
    bool has_p3 = false, has_k2k1 = false;
    for (const Graph& g : obs) {
      has_p3 |= oracle::isomorphic(g, p3);
      has_k2k1 |= oracle::isomorphic(g, k2k1);
    }
    CHECK(has_p3);
    CHECK(has_k2k1);
    CHECK(minimal_obstructions(1, 2).empty());
  }

  TEST_CASE("obstructions for two letters are minimal non-members") {
    const auto& o = letter_oracle();
    for (const Graph& g : minimal_obstructions(2, 5)) {
      CHECK(o.value(g) > 2);
      CHECK(o.value(g) <= 5);
      for (int v = 1; v <= g.order(); ++v) {
        VertexSet rest;
        for (int u = 1; u <= g.order(); ++u)
          if (u != v) rest.push_back(u);
        CHECK(o.value(oracle::induced(g, rest)) <= 2);
      }
    }
    // Every order-5 minimal non-member found by the oracle is listed.
    int expected = 0;
    for (const Graph& g : oracle::all_graphs(5)) {
      if (o.value(g) <= 2) continue;
      bool minimal = true;
      for (int v = 1; v <= 5; ++v) {
        VertexSet rest;
        for (int u = 1; u <= 5; ++u)
          if (u != v) rest.push_back(u);
        minimal &= o.value(oracle::induced(g, rest)) <= 2;
      }
      expected += minimal;
    }
    int listed = 0;
    for (const Graph& g : minimal_obstructions(2, 5)) listed += g.order() == 5;
    CHECK(listed == expected);
  }

  TEST_CASE("text formats") {
    Decoder d = fig1_decoder();
    CHECK(parse_decoder(format_decoder(d)) == d);
    CHECK(parse_word("  a c\n d ") == Word{"a", "c", "d"});
    CHECK(format_word({"a", "b"}) == "a b");
    CHECK_THROWS_AS(parse_decoder("letters a b\narc a c\n"), InputError);
    CHECK_THROWS_AS(parse_decoder("letters a a\n"), InputError);
    CHECK_THROWS_AS(parse_decoder("letters a\narc a a\narc a a\n"), InputError);
    CHECK(letter_name(0) == "a");
    CHECK(letter_name(25) == "z");
    CHECK(letter_name(26) == "x27");
  }
}
