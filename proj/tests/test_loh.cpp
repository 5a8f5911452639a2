#include <doctest.h>

#include <random>

#include "letgrid/loh.hpp"
#include "oracles.hpp"

using namespace letgrid;

namespace {

Loh make(int m, std::vector<std::vector<int>> orders) {
  std::vector<std::string> names;
  for (int x = 1; x <= m; ++x) names.push_back(std::to_string(x));
  std::vector<Hyperedge> edges;
  for (std::size_t e = 0; e < orders.size(); ++e) edges.push_back({"e" + std::to_string(e + 1), orders[e]});
  return validate_loh(std::move(names), std::move(edges));
}

std::vector<std::vector<int>> orders_of(const Loh& h) {
  std::vector<std::vector<int>> out;
  for (const auto& e : h.edges()) out.push_back(e.members);
  return out;
}

std::set<std::pair<int, int>> arc_set(const Digraph& d) {
  auto a = d.arcs();
  return {a.begin(), a.end()};
}

// Arcs as element-name pairs, so split results can be compared with the parent.
std::set<std::pair<std::string, std::string>> named_arcs(const Loh& h) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : conflict(h).arcs()) out.insert({h.element(u), h.element(v)});
  return out;
}

std::vector<std::vector<std::string>> named_edges(const Loh& h) {
  std::vector<std::vector<std::string>> out;
  for (const auto& e : h.edges()) {
    out.emplace_back();
    for (int x : e.members) out.back().push_back(h.element(x));
  }
  return out;
}

ChainCircuit uvw() { return validate_circuit(Graph(3, {{1, 2}, {2, 3}}), {{1}, {2}, {3}}); }

}  // namespace

TEST_SUITE("loh") {
  TEST_CASE("validation") {
    CHECK_NOTHROW(make(3, {{1, 2, 3}, {2, 3}}));
    CHECK_THROWS_AS(make(3, {{1, 2, 3}, {3, 2}}), InputError);
    CHECK_THROWS_AS(make(1, {}), InputError);
    CHECK_THROWS_AS(make(3, {{1, 2}}), InputError);
    CHECK_THROWS_AS(make(2, {{1, 2, 1}}), InputError);
    // Distinct cells may be ordered freely.
    CHECK_NOTHROW(make(4, {{1, 2, 3}, {4, 3}}));
    CHECK_NOTHROW(make(4, {{2, 1, 3}, {3, 4}}));
  }

  TEST_CASE("cells") {
    CHECK(cells(make(4, {{1, 2, 3}, {3, 4}})) == std::vector<VertexSet>{{1, 2}, {3}, {4}});
    CHECK(cells(make(3, {{3, 1, 2}})) == std::vector<VertexSet>{{1, 2, 3}});
    CHECK(cells(from_chain_circuit(generate_ckl(3, 1))).size() == 3);
  }

  TEST_CASE("conflict digraphs") {
    CHECK(arc_set(conflict(make(2, {{1, 2}}))) == std::set<std::pair<int, int>>{{1, 2}});
    CHECK(arc_set(conflict(make(4, {{1, 2}, {3, 4}}))) == std::set<std::pair<int, int>>{{1, 2}, {3, 4}});
    CHECK(arc_set(conflict(from_chain_circuit(generate_ckl(3, 1)))) ==
          std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 1}});
  }

  TEST_CASE("global consistency") {
    auto r = is_globally_consistent(make(4, {{1, 2, 3}, {2, 3, 4}}));
    CHECK(r.order == std::vector<int>{1, 2, 3, 4});
    CHECK(is_globally_consistent(make(3, {{3, 1, 2}})).order == std::vector<int>{3, 1, 2});
    auto tri = is_globally_consistent(from_chain_circuit(generate_ckl(3, 1)));
    CHECK_FALSE(tri.order);
    CHECK(tri.cycle.size() == 3);
  }

  TEST_CASE("consistent orders restrict to every hyperedge") {
    std::mt19937_64 rng(91);
    for (int round = 0; round < 300; ++round) {
      Loh h = random_loh(2 + round % 9, 1 + round % 4, rng);
      auto r = is_globally_consistent(h);
      CHECK(r.order.has_value() == oracle::acyclic(h.size(), arc_set(conflict(h))));
      if (!r.order) continue;
      std::vector<int> at(h.size() + 1);
      for (std::size_t i = 0; i < r.order->size(); ++i) at[(*r.order)[i]] = static_cast<int>(i);
      for (const auto& e : h.edges())
        for (std::size_t i = 0; i + 1 < e.members.size(); ++i) CHECK(at[e.members[i]] < at[e.members[i + 1]]);
    }
  }

  TEST_CASE("splits") {
    auto s = split(make(3, {{1, 2, 3}}), 2);
    CHECK(named_edges(s) == std::vector<std::vector<std::string>>{{"1"}, {"3"}});
    auto tri = split(from_chain_circuit(generate_ckl(3, 1)), 1);
    auto edges = named_edges(tri);
    std::sort(edges.begin(), edges.end());
    CHECK(edges == std::vector<std::vector<std::string>>{{"2"}, {"2", "3"}, {"3"}});
    CHECK(is_globally_consistent(tri).order);
    auto pair = split(make(3, {{1, 2}, {2, 3}}), 1);
    CHECK(named_edges(pair) == std::vector<std::vector<std::string>>{{"2"}, {"2", "3"}});
    CHECK_THROWS_AS(split(make(2, {{1, 2}}), 3), InputError);
  }

  TEST_CASE("splitting never adds conflict arcs") {
    std::mt19937_64 rng(93);
    for (int round = 0; round < 300; ++round) {
      Loh h = random_loh(2 + round % 9, 1 + round % 4, rng);
      auto before = named_arcs(h);
      int x = 1 + static_cast<int>(rng() % h.size());
      if (h.size() == 1) continue;
      Loh s = split(h, x);
      for (const auto& arc : named_arcs(s)) CHECK(before.count(arc));
    }
  }

  TEST_CASE("inconsistency examples") {
    CHECK(global_inconsistency(make(4, {{1, 2, 3}, {2, 3, 4}})).value == 0);
    auto tri = global_inconsistency(from_chain_circuit(generate_ckl(3, 1)));
    CHECK(tri.exact);
    CHECK(tri.value == 1);
    Loh c42 = from_chain_circuit(generate_ckl(4, 2));
    auto r = global_inconsistency(c42);
    REQUIRE(r.exact);
    CHECK(r.value == oracle::inconsistency(c42.size(), orders_of(c42)));
  }

  TEST_CASE("inconsistency matches the all-subsets oracle") {
    std::mt19937_64 rng(97);
    for (int round = 0; round < 250; ++round) {
      Loh h = random_loh(2 + round % 7, 2 + round % 3, rng);
      auto r = global_inconsistency(h);
      REQUIRE(r.exact);
      CHECK(r.value == oracle::inconsistency(h.size(), orders_of(h)));
      CHECK((r.value == 0) == is_globally_consistent(h).order.has_value());
      CHECK(r.value <= h.size());
    }
  }

  TEST_CASE("depth and step limits give lower bounds") {
    Loh c42 = from_chain_circuit(generate_ckl(4, 2));
    int exact = global_inconsistency(c42).value;
    REQUIRE(exact >= 1);
    auto shallow = global_inconsistency(c42, 0);
    CHECK_FALSE(shallow.exact);
    CHECK(shallow.value == 1);
    auto starved = global_inconsistency(c42, -1, Budget::steps(2));
    CHECK_FALSE(starved.exact);
    CHECK(starved.value <= exact);
  }

  TEST_CASE("from chain circuits") {
    auto consistent = from_chain_circuit(uvw());
    CHECK(is_globally_consistent(consistent).order);
    CHECK(global_inconsistency(consistent).value == 0);
    auto c41 = from_chain_circuit(generate_ckl(4, 1));
    CHECK(c41.edges().size() == 4);
    CHECK_FALSE(is_globally_consistent(c41).order);
    // Line graph is a 4-cycle: each hyperedge meets exactly two others.
    for (std::size_t e = 0; e < 4; ++e) {
      int meets = 0;
      for (std::size_t f = 0; f < 4; ++f) {
        if (e == f) continue;
        for (int x : c41.edges()[e].members)
          if (std::count(c41.edges()[f].members.begin(), c41.edges()[f].members.end(), x)) {
            ++meets;
            break;
          }
      }
      CHECK(meets == 2);
    }
  }

  TEST_CASE("circuit hyperedges carry the circuit's conflict arcs and bag orders") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 200; ++round) {
      auto cc = random_circuit(3 + round % 3, static_cast<int>(rng() % 16), rng);
      if (cc.order() == 0) continue;
      auto h = from_chain_circuit(cc);
      auto arcs = arc_set(conflict(h));
      for (auto arc : arc_set(conflict(cc))) CHECK(arcs.count(arc));
      for (const auto& bag : cc.bags())
        for (std::size_t p = 0; p + 1 < bag.size(); ++p) CHECK(arcs.count({bag[p], bag[p + 1]}));
      // Arcs only join vertices in equal or consecutive bags.
      for (auto [u, v] : arcs) {
        int d = (cc.bag_of(v) - cc.bag_of(u) + cc.k()) % cc.k();
        CHECK((d == 0 || d == 1 || d == cc.k() - 1));
      }
    }
  }

  TEST_CASE("text formats") {
    auto h = parse_loh("elem a b c\nedge e1 : a b c\nedge e2 : b c\n");
    CHECK(h.size() == 3);
    CHECK(h.find("c") == 3);
    CHECK(h.find("z") == 0);
    auto back = parse_loh(format_loh(h));
    CHECK(back.elements() == h.elements());
    CHECK(orders_of(back) == orders_of(h));
    CHECK_THROWS_AS(parse_loh("elem a b\nedge e : a q\n"), InputError);
    CHECK_THROWS_AS(parse_loh("elem a a\nedge e : a\n"), InputError);
    CHECK_THROWS_AS(parse_loh("elem a b c\nedge e1 : a b c\nedge e2 : c b\n"), InputError);
  }
}
