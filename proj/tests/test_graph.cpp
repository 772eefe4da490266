#include "matchent/catalog.hpp"
#include "matchent/graph.hpp"
#include "matchent/numeric.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace matchent;

TEST_CASE("edge-list parsing") {
  const Graph g = load_graph("# a square\nv 4\n0 1\n1 2 # comment\n\n2 3\n3 0\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(load_graph("0 1\n1 2\n").vertex_count() == 3);
  CHECK(load_graph("v 5\n").vertex_count() == 5);
  CHECK(load_graph("").vertex_count() == 0);

  try {
    load_graph("0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_graph("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(load_graph("3 3\n"), ParseError);
  CHECK_THROWS_AS(load_graph("v 3\n0 3\n"), RangeError);
  CHECK_THROWS_AS(load_graph("0 1\nv 3\n"), ParseError);
  CHECK_THROWS_AS(load_graph("-1 2\n"), ParseError);

  const Graph multi = load_graph("0 1\n0 1\n");
  CHECK(multi.edge_count() == 2);
  CHECK(load_graph(write_edge_list(g)).edges() == g.edges());
}

TEST_CASE("degree profiles") {
  auto p = degree_profile(cycle_graph(6));
  CHECK(p.is_regular);
  CHECK(p.degree == 2);
  CHECK(p.is_biregular);

  p = degree_profile(complete_bipartite(2, 3));
  CHECK_FALSE(p.is_regular);
  CHECK(p.is_biregular);
  CHECK(p.a == 3);
  CHECK(p.b == 2);
  CHECK(p.class_a_size() == 2);

  p = degree_profile(subdivision(complete_graph(4)));
  CHECK(p.is_biregular);
  CHECK(p.a == 3);
  CHECK(p.b == 2);
  CHECK(p.class_a_size() == 4);

  p = degree_profile(path_graph(4));
  CHECK_FALSE(p.is_regular);
  CHECK_FALSE(p.is_biregular);

  p = degree_profile(cycle_graph(5));
  CHECK(p.is_regular);
  CHECK_FALSE(p.is_biregular);

  // Two components with mirrored orientation.
  p = degree_profile(disjoint_union(complete_bipartite(3, 2), complete_bipartite(2, 3)));
  CHECK(p.is_biregular);
  CHECK(p.class_a_size() == 4);
}

TEST_CASE("girth and cycle counts") {
  CHECK(girth(cycle_graph(7)) == 7);
  CHECK(girth(heawood_graph()) == 6);
  CHECK(girth(hypercube(3)) == 4);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK_FALSE(girth(path_graph(5)).has_value());
  CHECK(girth(load_graph("0 1\n0 1\n1 2\n")) == 2);

  CHECK(count_cycles(complete_graph(4), 3) == 4);
  CHECK(count_cycles(complete_graph(4), 4) == 3);
  CHECK(count_cycles(complete_bipartite(3, 3), 4) == 9);
  CHECK(count_cycles(heawood_graph(), 6) == 28);
  CHECK(count_cycles(load_graph("0 1\n0 1\n0 1\n"), 2) == 3);

  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = random_bipartite(3, 4, 0.6, seed);
    for (int len = 2; len <= 7; ++len) CHECK(count_cycles(g, len) == oracle::cycles_by_subsets(g, len));
  }
  const Graph k5 = complete_graph(5);
  for (int len = 3; len <= 5; ++len) CHECK(count_cycles(k5, len) == oracle::cycles_by_subsets(k5, len));
}

TEST_CASE("maximum matching against enumeration") {
  CHECK(max_matching(cycle_graph(7)) == 3);
  CHECK(max_matching(complete_graph(5)) == 2);
  CHECK(max_matching(star_graph(4)) == 1);
  CHECK(max_matching(heawood_graph()) == 7);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 6;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) edges.push_back({i, j});
    const Graph g(n, edges);
    CHECK(max_matching(g) == static_cast<int>(oracle::matching_counts(g).size()) - 1);
  }
}

TEST_CASE("disjoint union and forests") {
  const Graph u = disjoint_union(cycle_graph(4), path_graph(3));
  CHECK(u.vertex_count() == 7);
  CHECK(u.edge_count() == 6);
  CHECK(u.components().size() == 2);
  CHECK(random_tree(9, 3).is_forest());
  CHECK_FALSE(cycle_graph(4).is_forest());
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), RangeError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), RangeError);
}

TEST_CASE("catalog") {
  const auto reg = regular_catalog();
  CHECK(reg.size() == 7 + 5 + 2 + 20);
  for (const auto& [name, g] : reg) {
    INFO(name);
    CHECK(g.is_bipartite());
    CHECK(degree_profile(g).is_regular);
    CHECK(g.vertex_count() <= 16);
  }
  for (const auto& [name, g] : biregular_catalog()) {
    INFO(name);
    CHECK(g.is_bipartite());
    CHECK(degree_profile(g).is_biregular);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("0.9") == Rational(9, 10));
  CHECK(parse_rational("0.09") == Rational(9, 100));
  CHECK(parse_rational("007") == 7);
  CHECK(parse_rational("-1/3") == Rational(-1, 3));
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(parse_rational("0") == 0);
  CHECK_THROWS_AS(parse_rational("0x"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
}
