#include "matchent/catalog.hpp"
#include "matchent/matchpoly.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace matchent;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

double eval_poly(const std::vector<BigInt>& c, double x) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_double(Rational(*it));
  return acc;
}

}  // namespace

TEST_CASE("matching counts of named graphs") {
  CHECK(matching_polynomial(cycle_graph(4)).coefficients == ints({1, 4, 2}));
  CHECK(matching_polynomial(cycle_graph(6)).coefficients == ints({1, 6, 9, 2}));
  CHECK(matching_polynomial(complete_bipartite(3, 3)).coefficients == ints({1, 9, 18, 6}));
  CHECK(matching_polynomial(load_graph("0 1\n")).coefficients == ints({1, 1}));
  CHECK(matching_polynomial(Graph(3, {})).coefficients == ints({1}));
  CHECK(matching_polynomial(Graph()).coefficients == ints({1}));
  CHECK(matching_polynomial(load_graph("0 1\n0 1\n1 2\n")).coefficients == ints({1, 3}));
  CHECK(matching_polynomial(complete_graph(6)).m(3) == 15);
  CHECK(matching_polynomial(complete_bipartite(5, 5)).m(5) == 120);
  CHECK(matching_polynomial(heawood_graph()).m(7) == 24);
}

TEST_CASE("matching counts agree with subset enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 9;
    std::vector<Edge> edges;
    const int m = static_cast<int>(rng() % 16);
    for (int i = 0; i < m; ++i) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v) edges.push_back({u, v});
    }
    const Graph g(n, edges);
    CHECK(matching_polynomial(g).coefficients == oracle::matching_counts(g));
  }
  for (const auto& [name, g] : regular_catalog()) {
    if (g.edge_count() > 24) continue;
    INFO(name);
    CHECK(matching_polynomial(g).coefficients == oracle::matching_counts(g));
  }
}

TEST_CASE("disjoint unions convolve") {
  const Graph a = cycle_graph(5), b = complete_bipartite(2, 3);
  CHECK(matching_polynomial(disjoint_union(a, b)) == convolve(matching_polynomial(a), matching_polynomial(b)));
}

TEST_CASE("size guard") {
  MatchPolyOptions small;
  small.max_vertices = 10;
  CHECK_THROWS_AS(matching_polynomial(cycle_graph(12), small), TooLargeError);
  MatchPolyOptions big;
  big.max_vertices = 200;
  const auto c64 = matching_polynomial(cycle_graph(64), big);
  CHECK(c64.m(32) == 2);
  CHECK(c64.m(1) == 64);
}

TEST_CASE("evaluation") {
  const auto p = matching_polynomial(cycle_graph(6));
  CHECK(evaluate_M(p, Rational(1)) == 18);
  CHECK(evaluate_M(p, 1.0) == doctest::Approx(18));
  CHECK(evaluate_M(p, Rational(1, 2)) == Rational(1) + 3 + Rational(9, 4) + Rational(1, 4));
  CHECK(evaluate_tdM(p, Rational(1)) == 6 + 18 + 6);
  CHECK(p.p_star() == 1);
  CHECK(matching_polynomial(cycle_graph(5)).p_star() == Rational(4, 5));
}

TEST_CASE("mu coefficients") {
  CHECK(mu_coefficients(matching_polynomial(cycle_graph(4))) == ints({2, 0, -4, 0, 1}));
  CHECK(mu_coefficients(matching_polynomial(path_graph(3))) == ints({0, -2, 0, 1}));
}

TEST_CASE("roots of the matching polynomial") {
  const auto c4 = matching_measure(matching_polynomial(cycle_graph(4)));
  REQUIRE(c4.roots.size() == 4);
  CHECK(c4.roots[3].value == doctest::Approx(std::sqrt(2 + std::sqrt(2.0))).epsilon(1e-12));
  CHECK(c4.roots[2].value == doctest::Approx(std::sqrt(2 - std::sqrt(2.0))).epsilon(1e-12));

  const auto star = matching_measure(matching_polynomial(star_graph(4)));
  CHECK(star.total_multiplicity() == 5);
  bool zero_found = false;
  for (const auto& r : star.roots)
    if (r.value == 0) {
      zero_found = true;
      CHECK(r.multiplicity == 3);
    }
  CHECK(zero_found);

  // Repeated nonzero roots: two disjoint copies of C6.
  const auto twice = matching_measure(matching_polynomial(disjoint_union(cycle_graph(6), cycle_graph(6))));
  CHECK(twice.roots.size() == 6);
  for (const auto& r : twice.roots) CHECK(r.multiplicity == 2);

  for (const auto& [name, g] : regular_catalog()) {
    INFO(name);
    const auto poly = matching_polynomial(g);
    const auto mu = mu_coefficients(poly);
    const auto m = matching_measure(poly);
    CHECK(m.total_multiplicity() == g.vertex_count());
    for (const auto& r : m.roots) {
      double scale = 0;
      for (const auto& c : mu) scale += std::abs(to_double(Rational(c))) * std::pow(std::abs(r.value), &c - &mu[0]);
      CHECK(std::abs(eval_poly(mu, r.value)) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("power sums by Newton identities") {
  const auto c4 = matching_polynomial(cycle_graph(4));
  const auto p = power_sums(c4, 6);
  CHECK(p == ints({0, 8, 0, 24, 0, 80}));
  for (const auto& [name, g] : regular_catalog()) {
    INFO(name);
    const auto poly = matching_polynomial(g);
    const auto measure = matching_measure(poly);
    const auto sums = power_sums(poly, 8);
    for (int k = 1; k <= 8; ++k) {
      const double numeric = measure.integrate([k](double x) { return std::pow(x, k); }) * g.vertex_count();
      CHECK(numeric == doctest::Approx(to_double(Rational(sums[k - 1]))).epsilon(1e-9).scale(1));
    }
  }
}

TEST_CASE("matching energy") {
  const auto m = matching_measure(matching_polynomial(cycle_graph(4)));
  CHECK(matching_energy(m) == doctest::Approx(2 * (std::sqrt(2 + std::sqrt(2.0)) + std::sqrt(2 - std::sqrt(2.0)))));
}

TEST_CASE("characteristic polynomial and trees") {
  CHECK(characteristic_polynomial(cycle_graph(4)) == ints({0, 0, -4, 0, 1}));
  CHECK(characteristic_polynomial(complete_graph(3)) == ints({-2, -3, 0, 1}));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph t = random_tree(2 + seed % 11, seed);
    CHECK(is_tree_spectral_match(t));
    CHECK(mu_coefficients(matching_polynomial(t)) == characteristic_polynomial(t));
  }
  CHECK(is_tree_spectral_match(disjoint_union(path_graph(3), path_graph(4))));
  CHECK_THROWS_AS(is_tree_spectral_match(cycle_graph(4)), DomainError);
  // A cycle is where the two polynomials differ.
  CHECK(mu_coefficients(matching_polynomial(cycle_graph(4))) != characteristic_polynomial(cycle_graph(4)));
}
