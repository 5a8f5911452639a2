#include <doctest.h>

#include <random>

#include "letgrid/letters.hpp"
#include "letgrid/partition.hpp"
#include "oracles.hpp"

using namespace letgrid;

namespace {

// Path 2-1-4-3.
Graph p4() { return Graph(4, {{2, 1}, {1, 4}, {4, 3}}); }

PartitionCertificate cert(std::vector<std::vector<int>> bags) { return {{}, std::move(bags), {}}; }

std::vector<std::vector<int>> random_bags(int n, std::mt19937_64& rng) {
  int t = 1 + static_cast<int>(rng() % n);
  std::vector<std::vector<int>> bags(t);
  for (int v = 1; v <= n; ++v) bags[rng() % t].push_back(v);
  std::erase_if(bags, [](const auto& b) { return b.empty(); });
  for (auto& b : bags) std::shuffle(b.begin(), b.end(), rng);
  return bags;
}

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng() % 2) g.add_edge(i, j);
  return g;
}

Colouring colouring(int n, const std::function<std::string(int, int)>& f) {
  Colouring c{n, 0, {}};
  for (int x = 1; x <= n; ++x) {
    c.colour.emplace_back();
    for (int y = 1; y <= n; ++y) c.colour.back().push_back(f(x, y));
  }
  return c;
}

}  // namespace

TEST_SUITE("partition_params") {
  TEST_CASE("certificate examples") {
    auto c = cert({{3, 1}, {2, 4}});
    CHECK(check_partition(p4(), c, PartitionLevel::chain));
    CHECK(check_partition(p4(), c, PartitionLevel::semi));
    // Both stored orders increase toward the other bag, so no proper reading exists.
    CHECK_FALSE(check_partition(p4(), c, PartitionLevel::proper));
    CHECK(check_partition(p4(), cert({{3, 1}, {4, 2}}), PartitionLevel::proper));
    CHECK(check_partition(Graph(5), cert({{1, 2, 3, 4, 5}}), PartitionLevel::proper));
    CHECK_FALSE(check_partition(p4(), cert({{1, 2, 3, 4}}), PartitionLevel::chain));
    CHECK_THROWS_AS(check_partition(p4(), cert({{1, 2}, {3}}), PartitionLevel::chain), InputError);
    CHECK_THROWS_AS(check_partition(p4(), cert({{1, 2}, {2, 3, 4}}), PartitionLevel::chain), InputError);
  }

  TEST_CASE("declared signs are enforced") {
    PartitionCertificate c{{}, {{3, 1}, {4, 2}}, {{0, 1, -1}}};
    // N(3) = {4} inside N(1) = {2, 4}: the order 3, 1 increases.
    CHECK_FALSE(check_partition(p4(), c, PartitionLevel::semi));
    c.signs = {{0, 1, 1}};
    CHECK(check_partition(p4(), c, PartitionLevel::proper));
  }

  TEST_CASE("small parameter values") {
    for (int n = 1; n <= 7; ++n) CHECK(gamma(generate(GraphFamily::complete, n)) == 1);
    CHECK(gamma(generate(GraphFamily::cycle, 5)) == 3);
    CHECK(sigma(Graph(4)) == 1);
    CHECK(sigma(p4()) == 2);
    CHECK(lambda(p4()) == 2);
    auto r = chain_parameter(p4(), PartitionLevel::proper);
    CHECK(r.value == 2);
    CHECK(check_partition(p4(), r.witness, PartitionLevel::proper));
    auto big = linked_chain(Permutation({6, 1, 4, 2, 5, 3}));
    CHECK(check_partition(big.graph, cert({big.a, big.b, big.c}), PartitionLevel::chain));
  }

  TEST_CASE("parameters match the all-partitions oracle up to order 6") {
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : oracle::all_graphs(n)) {
        int gm = gamma(g), sg = sigma(g), lm = lambda(g);
        REQUIRE(gm == oracle::chain_parameter(g, 1));
        REQUIRE(sg == oracle::chain_parameter(g, 2));
        REQUIRE(lm == oracle::chain_parameter(g, 3));
        CHECK(gm <= sg);
        CHECK(sg <= lm);
        CHECK(lm <= lettericity(g).value());
        auto w = chain_parameter(g, PartitionLevel::proper).witness;
        CHECK(check_partition(g, w, PartitionLevel::proper));
        CHECK(static_cast<int>(w.bags.size()) == lm);
      }
  }

  TEST_CASE("the parameter hierarchy on random graphs of order 7 and 8") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 12; ++round) {
      Graph g = random_graph(7 + round % 2, rng);
      int gm = gamma(g), sg = sigma(g), lm = lambda(g);
      CHECK(gm <= sg);
      CHECK(sg <= lm);
      CHECK(lm <= lettericity(g).value());
    }
  }

  TEST_CASE("proper implies semi implies chain on random certificates") {
    std::mt19937_64 rng(73);
    int proper = 0, semi = 0;
    for (int round = 0; round < 3000; ++round) {
      int n = 1 + round % 7;
      Graph g = random_graph(n, rng);
      auto c = cert(random_bags(n, rng));
      bool p = check_partition(g, c, PartitionLevel::proper).ok;
      bool s = check_partition(g, c, PartitionLevel::semi).ok;
      bool ch = check_partition(g, c, PartitionLevel::chain).ok;
      if (p) CHECK(s);
      if (s) CHECK(ch);
      if (s) CHECK(oracle::partition_passes(g, c.bags, 2));
      if (p) CHECK(oracle::partition_passes(g, c.bags, 3));
      if (ch) CHECK(oracle::partition_passes(g, c.bags, 1));
      proper += p;
      semi += s;
    }
    CHECK(proper > 100);
    CHECK(semi > proper);
  }

  TEST_CASE("order search agrees with trying every order") {
    std::mt19937_64 rng(79);
    for (int round = 0; round < 400; ++round) {
      int n = 2 + round % 6;
      Graph g = random_graph(n, rng);
      auto bags = random_bags(n, rng);
      for (auto level : {PartitionLevel::semi, PartitionLevel::proper}) {
        auto found = order_bags(g, bags, level);
        REQUIRE(found.has_value() == oracle::partition_passes(g, bags, level == PartitionLevel::semi ? 2 : 3));
        if (found) CHECK(check_partition(g, *found, level));
      }
    }
  }

  TEST_CASE("linked chain graphs") {
    auto one = linked_chain(Permutation({1}));
    CHECK(one.graph == Graph(3, {{1, 2}, {2, 3}}));
    // x1 = 1, x2 = 2, y1 = 3, y2 = 4, z1 = 5, z2 = 6.
    auto two = linked_chain(Permutation({2, 1}));
    CHECK(two.graph == Graph(6, {{1, 3}, {1, 4}, {2, 4}, {3, 6}, {4, 5}, {4, 6}}));
    CHECK_THROWS_AS(linked_chain(Permutation()), InputError);
  }

  TEST_CASE("the linked chain graph of 614253") {
    auto lcg = linked_chain(Permutation({6, 1, 4, 2, 5, 3}));
    const Graph& g = lcg.graph;
    REQUIRE(g.order() == 18);
    // Neighbours in C of each y_j, read off the drawing.
    const std::vector<std::vector<int>> in_c = {{2, 3, 4, 5, 6}, {4, 5, 6}, {6}, {3, 4, 5, 6}, {5, 6}, {1, 2, 3, 4, 5, 6}};
    for (int j = 1; j <= 6; ++j) {
      for (int i = 1; i <= 6; ++i) CHECK(g.adjacent(6 + j, i) == (i <= j));
      for (int c = 1; c <= 6; ++c) {
        bool expect = std::count(in_c[j - 1].begin(), in_c[j - 1].end(), c) > 0;
        CHECK(g.adjacent(6 + j, 12 + c) == expect);
      }
    }
    CHECK(g.size() == 21 + 21);
    for (int a : lcg.a)
      for (int c : lcg.c) CHECK_FALSE(g.adjacent(a, c));
  }

  TEST_CASE("linked chain graphs always have a three-bag chain certificate") {
    for (int n = 1; n <= 6; ++n)
      for (const auto& pi : all_permutations(n)) {
        auto lcg = linked_chain(pi);
        REQUIRE(check_partition(lcg.graph, cert({lcg.a, lcg.b, lcg.c}), PartitionLevel::chain));
        CHECK(is_chain_pair(lcg.graph, lcg.a, lcg.b));
        CHECK(is_chain_pair(lcg.graph, lcg.b, lcg.c));
      }
  }

  TEST_CASE("canonical semi-consistency") {
    CHECK(check_canonical_semi(linked_chain(Permutation({1}))));
    CHECK(check_canonical_semi(linked_chain(Permutation({1, 2}))));
    CHECK_FALSE(check_canonical_semi(linked_chain(pi_n(2))));
    for (int n = 1; n <= 4; ++n)
      for (const auto& pi : all_permutations(n)) {
        auto lcg = linked_chain(pi);
        CHECK(check_canonical_semi(lcg) == oracle::partition_passes(lcg.graph, {lcg.a, lcg.b, lcg.c}, 2));
      }
  }

  TEST_CASE("pattern containment gives induced linked chain graphs") {
    CHECK(pattern_monotone_containment(Permutation({6, 1, 4, 2, 5, 3}), linked_chain(Permutation({1, 4, 2, 3}))));
    CHECK_FALSE(pattern_monotone_containment(Permutation({1, 2, 3}), linked_chain(Permutation({2, 1}))));
    CHECK(pattern_monotone_containment(Permutation({2, 1}), linked_chain(Permutation({2, 1}))));
    for (int n = 1; n <= 4; ++n)
      for (const auto& pi : all_permutations(n)) {
        Graph big = linked_chain(pi).graph;
        for (int m = 1; m <= n; ++m)
          for (const auto& sigma : all_permutations(m)) {
            auto sub = linked_chain(sigma);
            if (pattern_monotone_containment(pi, sub)) CHECK(contains_induced(big, sub.graph));
          }
      }
  }

  TEST_CASE("monochromatic progression grids") {
    auto constant = ap_grid_search(colouring(4, [](int, int) { return "r"; }), 3);
    REQUIRE(constant);
    CHECK(constant->x == std::vector<int>{1, 2, 3});
    CHECK(constant->y == std::vector<int>{1, 2, 3});
    auto checker = ap_grid_search(colouring(3, [](int x, int y) { return (x + y) % 2 ? "b" : "w"; }), 2);
    REQUIRE(checker);
    CHECK(checker->x == std::vector<int>{1, 3});
    CHECK(checker->y == std::vector<int>{1, 3});
    CHECK_FALSE(ap_grid_search(colouring(3, [](int x, int y) { return std::to_string(x * 10 + y); }), 2));
  }

  TEST_CASE("progression witnesses are monochromatic") {
    std::mt19937_64 rng(83);
    for (int round = 0; round < 200; ++round) {
      int n = 3 + round % 6, k = 1 + round % 3;
      auto c = colouring(n, [&](int, int) { return std::to_string(rng() % 2); });
      auto w = ap_grid_search(c, k);
      // Naive search over all progression pairs; length 1 needs one difference only.
      bool any = false;
      int dmax = k == 1 ? 1 : n;
      for (int s1 = 1; s1 <= n; ++s1)
        for (int d1 = 1; d1 <= dmax && s1 + (k - 1) * d1 <= n; ++d1)
          for (int s2 = 1; s2 <= n; ++s2)
            for (int d2 = 1; d2 <= dmax && s2 + (k - 1) * d2 <= n; ++d2) {
              std::set<std::string> seen;
              for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) seen.insert(c.colour[s1 + i * d1 - 1][s2 + j * d2 - 1]);
              any |= seen.size() == 1;
            }
      REQUIRE(w.has_value() == any);
      if (w) {
        CHECK(w->x.size() == static_cast<std::size_t>(k));
        for (int a : w->x)
          for (int b : w->y) CHECK(c.colour[a - 1][b - 1] == w->colour);
      }
    }
  }

  TEST_CASE("text formats") {
    auto c = parse_certificate("bag A : 3 1\nbag B : 2 4\nsign A B +\n");
    CHECK(c.names == std::vector<std::string>{"A", "B"});
    CHECK(c.bags == std::vector<std::vector<int>>{{3, 1}, {2, 4}});
    CHECK(c.signs == std::vector<std::tuple<int, int, int>>{{0, 1, 1}});
    CHECK(parse_certificate(format_certificate(c)).bags == c.bags);
    CHECK_THROWS_AS(parse_certificate("bag A : 1\nsign A C +\n"), InputError);
    CHECK_THROWS_AS(parse_certificate("bag A 1\n"), InputError);
    auto col = parse_colouring("2 1\nr g\ng r\n");
    CHECK(col.n == 2);
    CHECK(col.colour[0][1] == "g");
    CHECK_THROWS_AS(parse_colouring("2 1\nr g\n"), InputError);
  }
}
