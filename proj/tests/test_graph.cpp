#include <doctest.h>

#include <random>

#include "letgrid/graph.hpp"
#include "letgrid/letters.hpp"
#include "letgrid/permutation.hpp"
#include "oracles.hpp"

using namespace letgrid;

namespace {

Graph p4() { return generate(GraphFamily::path, 4); }

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_SUITE("graph_core") {
  TEST_CASE("induced subgraphs relabel in ascending order") {
    CHECK(induced_subgraph(p4(), {1, 2}) == generate(GraphFamily::complete, 2));
    CHECK(induced_subgraph(p4(), {1, 2, 3, 4}) == p4());
    CHECK(induced_subgraph(generate(GraphFamily::cycle, 5), {1, 2, 3}) == generate(GraphFamily::path, 3));
    CHECK(induced_subgraph(p4(), {3, 1}) == Graph(2));
    CHECK_THROWS_AS(induced_subgraph(p4(), {1, 5}), InputError);
  }

  TEST_CASE("complement") {
    Graph two_k2 = generate(GraphFamily::matching, 2);
    CHECK(is_isomorphic(complement(two_k2), generate(GraphFamily::cycle, 4)));
    CHECK(complement(generate(GraphFamily::complete, 3)) == Graph(3));
    CHECK(complement(complement(p4())) == p4());
  }

  TEST_CASE("homogeneity") {
    CHECK(is_homogeneous(p4(), {1, 3}));
    CHECK_FALSE(is_homogeneous(p4(), {1, 2, 3}));
    CHECK(is_homogeneous(p4(), {}));
    CHECK(is_homogeneous(generate(GraphFamily::complete, 5), {1, 2, 3, 4, 5}));
  }

  TEST_CASE("chain pairs") {
    // Prime chain graph on six vertices: word abab ab with the single arc (a, b).
    Decoder d({"a", "b"}, {{"a", "b"}});
    Graph prime = decode(d, parse_word("a b a b a b"));
    CHECK(is_chain_pair(prime, {1, 3, 5}, {2, 4, 6}));
    Graph two_k2 = generate(GraphFamily::matching, 2);
    CHECK_FALSE(is_chain_pair(two_k2, {1, 3}, {2, 4}));
    CHECK(is_chain_pair(two_k2, {1, 3}, {}));
    CHECK_THROWS_AS(is_chain_pair(two_k2, {1, 2}, {2, 3}), InputError);
  }

  TEST_CASE("chain pairs agree with a cross 2K2 search on every graph up to order 6") {
    for (int n = 2; n <= 6; ++n)
      for (const Graph& g : oracle::all_graphs(n))
        // Every split of the vertex set into a, b and the rest.
        for (int code = 0; code < (1 << (2 * n)); ++code) {
          std::vector<int> a, b;
          bool skip = false;
          for (int v = 1; v <= n; ++v) {
            int side = (code >> (2 * (v - 1))) & 3;
            if (side == 3) skip = true;
            if (side == 1) a.push_back(v);
            if (side == 2) b.push_back(v);
          }
          if (skip) continue;
          REQUIRE(is_chain_pair(g, a, b) == !oracle::has_cross_2k2(g, a, b));
        }
  }

  TEST_CASE("random chain pair checks on order 7 and 8") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 400; ++round) {
      int n = 7 + round % 2;
      Graph g = random_graph(n, 0.5, rng);
      std::vector<int> a, b;
      for (int v = 1; v <= n; ++v) {
        int side = std::uniform_int_distribution<int>(0, 2)(rng);
        if (side == 1) a.push_back(v);
        if (side == 2) b.push_back(v);
      }
      CHECK(is_chain_pair(g, a, b) == !oracle::has_cross_2k2(g, a, b));
    }
  }

  TEST_CASE("induced containment") {
    CHECK(contains_induced(p4(), generate(GraphFamily::path, 3)) == VertexSet{1, 2, 3});
    auto w = contains_induced(generate(GraphFamily::cycle, 5), p4());
    REQUIRE(w);
    CHECK(is_isomorphic(induced_subgraph(generate(GraphFamily::cycle, 5), *w), p4()));
    CHECK_FALSE(contains_induced(generate(GraphFamily::cycle, 4), p4()));
    CHECK(contains_induced(p4(), Graph(0)) == VertexSet{});
  }

  TEST_CASE("induced containment matches the all-subsets oracle") {
    std::mt19937_64 rng(5);
    std::vector<Graph> patterns;
    for (int n = 1; n <= 4; ++n)
      for (const Graph& g : oracle::all_graphs(n)) patterns.push_back(g);
    for (int round = 0; round < 60; ++round) {
      Graph host = random_graph(5 + round % 4, 0.45, rng);
      for (const Graph& p : patterns) {
        auto w = contains_induced(host, p);
        REQUIRE(w.has_value() == oracle::contains_induced(host, p));
        if (w) {
          CHECK(oracle::isomorphic(oracle::induced(host, *w), p));
        }
      }
    }
  }

  TEST_CASE("the containment witness is the lexicographically least one") {
    Graph c6 = generate(GraphFamily::cycle, 6);
    CHECK(contains_induced(c6, generate(GraphFamily::path, 3)) == VertexSet{1, 2, 3});
    CHECK(contains_induced(c6, generate(GraphFamily::matching, 2)) == VertexSet{1, 2, 4, 5});
  }

  TEST_CASE("isomorphism") {
    Graph relabelled(4, {{3, 1}, {1, 4}, {4, 2}});
    CHECK(is_isomorphic(p4(), relabelled));
    CHECK_FALSE(is_isomorphic(generate(GraphFamily::cycle, 4), generate(GraphFamily::matching, 2)));
    CHECK(is_isomorphic(inversion_graph(Permutation({2, 4, 1, 3})), inversion_graph(Permutation({3, 1, 4, 2}))));
  }

  TEST_CASE("isomorphism agrees with the all-relabellings oracle") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 300; ++round) {
      int n = 4 + round % 5;
      Graph a = random_graph(n, 0.5, rng);
      std::vector<int> order = oracle::iota_vec(n);
      std::shuffle(order.begin(), order.end(), rng);
      Graph b = relabel(a, order);
      CHECK(is_isomorphic(a, b));
      auto m = find_isomorphism(a, b);
      REQUIRE(m);
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) CHECK(a.adjacent(u, v) == b.adjacent((*m)[u - 1], (*m)[v - 1]));
      Graph c = random_graph(n, 0.5, rng);
      CHECK(is_isomorphic(a, c) == oracle::isomorphic(a, c));
      CHECK(canonical_key(a) == canonical_key(b));
    }
  }

  TEST_CASE("refinement isomorphism beyond the canonical-form range") {
    Graph c12 = generate(GraphFamily::cycle, 12);
    std::vector<int> order = oracle::iota_vec(12);
    std::mt19937_64 rng(3);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(is_isomorphic(c12, relabel(c12, order)));
    Graph two_c6 = disjoint_union(generate(GraphFamily::cycle, 6), generate(GraphFamily::cycle, 6));
    CHECK_FALSE(is_isomorphic(c12, two_c6));
  }

  TEST_CASE("generators") {
    CHECK(generate(GraphFamily::cycle, 4).size() == 4);
    Graph m3 = generate(GraphFamily::matching, 3);
    CHECK(m3.order() == 6);
    CHECK(m3.edges() == std::vector<Edge>{{1, 2}, {3, 4}, {5, 6}});
    CHECK(generate(GraphFamily::path, 1) == Graph(1));
    CHECK(generate(GraphFamily::edgeless, 3) == Graph(3));
    CHECK_THROWS_AS(generate(GraphFamily::cycle, 2), InputError);
    CHECK(family_from_name("matching") == GraphFamily::matching);
    CHECK_FALSE(family_from_name("star"));
  }

  TEST_CASE("graph enumeration counts") {
    const int counts[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == static_cast<std::size_t>(counts[n]));
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_graphs(n).size() == oracle::all_graphs(n).size());
  }

  TEST_CASE("cochromatic number matches partition search") {
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : oracle::all_graphs(n)) REQUIRE(cochromatic_number(g) == oracle::cochromatic(g));
    CHECK(cochromatic_number(generate(GraphFamily::cycle, 5)) == 3);
  }

  TEST_CASE("induced subgraph size and complement edge count") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 100; ++round) {
      int n = 1 + round % 10;
      Graph g = random_graph(n, 0.4, rng);
      CHECK(g.size() + complement(g).size() == n * (n - 1) / 2);
      std::vector<int> u;
      for (int v = 1; v <= n; ++v)
        if (rng() % 2) u.push_back(v);
      Graph h = induced_subgraph(g, u);
      CHECK(h.order() == static_cast<int>(u.size()));
      int inside = 0;
      for (auto [a, b] : g.edges())
        inside += std::count(u.begin(), u.end(), a) && std::count(u.begin(), u.end(), b);
      CHECK(h.size() == inside);
    }
  }

  TEST_CASE("text format round trip and errors") {
    Graph g = generate(GraphFamily::cycle, 5);
    CHECK(parse_graph(format_graph(g)) == g);
    CHECK(format_graph(p4()) == "graph 4\ne 1 2\ne 2 3\ne 3 4\n");
    CHECK_THROWS_AS(parse_graph("graph 2\ne 1 3\n"), InputError);
    CHECK_THROWS_AS(parse_graph("graph 2\ne 1 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph("graph 2\ne 1 2\ne 2 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph("grph 2\n"), InputError);
    CHECK(to_dot(p4()).find("1 -- 2") != std::string::npos);
  }
}
