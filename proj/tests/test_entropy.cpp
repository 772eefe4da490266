#include "matchent/catalog.hpp"
#include "matchent/entropy.hpp"

#include <doctest.h>

#include <cmath>

using namespace matchent;

TEST_CASE("density") {
  const auto c4 = matching_polynomial(cycle_graph(4));
  CHECK(density(c4, Rational(1)) == Rational(4, 7));
  CHECK(density(c4, 0.0) == 0);
  CHECK(density(matching_polynomial(load_graph("0 1\n")), Rational(1)) == Rational(1, 2));
  CHECK_THROWS_AS(density(c4, -1.0), DomainError);
  double prev = -1;
  for (double t : {0.0, 0.01, 0.5, 1.0, 10.0, 1e4, 1e8}) {
    const double p = density(c4, t);
    CHECK(p > prev);
    CHECK(p < 1);
    prev = p;
  }
  CHECK(density(c4, 1e12) == doctest::Approx(1).epsilon(1e-9));
  CHECK(density(matching_polynomial(cycle_graph(5)), 1e12) == doctest::Approx(0.8).epsilon(1e-9));
}

TEST_CASE("activity inverts density") {
  const auto c4 = matching_polynomial(cycle_graph(4));
  CHECK(activity(c4, 4.0 / 7) == doctest::Approx(1).epsilon(1e-12));
  CHECK(activity(c4, 0) == 0);
  CHECK(activity(matching_polynomial(load_graph("0 1\n")), 0.5) == doctest::Approx(1).epsilon(1e-12));
  CHECK_THROWS_AS(activity(c4, 1.0), DomainError);
  CHECK_THROWS_AS(activity(matching_polynomial(cycle_graph(5)), 0.9), DomainError);
  try {
    activity(matching_polynomial(cycle_graph(5)), 0.85);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("4/5") != std::string::npos);
  }
  for (const auto& [name, g] : regular_catalog()) {
    const auto poly = matching_polynomial(g);
    for (double p : {0.01, 0.3, 0.7, 0.99, 0.999999}) {
      const double t = activity(poly, p);
      CHECK(std::abs(density(poly, t) - p) <= 1e-12);
    }
  }
}

TEST_CASE("entropy values") {
  const auto k2 = matching_polynomial(load_graph("0 1\n"));
  CHECK(entropy_at(k2, 1).lambda == 0);
  CHECK(entropy_at(k2, 1).at_p_star);
  const auto c6 = matching_polynomial(cycle_graph(6));
  CHECK(entropy_at(c6, 1).lambda == doctest::Approx(std::log(2.0) / 6).epsilon(1e-15));
  const auto c4 = matching_polynomial(cycle_graph(4));
  CHECK(entropy_at(c4, 4.0 / 7).lambda == doctest::Approx(std::log(7.0) / 4).epsilon(1e-12));
  CHECK(entropy_at(c4, 0).lambda == 0);
  CHECK(entropy_at(c4, 0).t == 0);
  const auto c5 = matching_polynomial(cycle_graph(5));
  CHECK(entropy_at(c5, 0.9).out_of_range);
  CHECK(entropy_at(c5, 0.9).lambda == 0);
  CHECK(entropy_at(c5, 0.8 - 1e-13).at_p_star);
  CHECK(entropy_at(c5, 0.8).lambda == doctest::Approx(std::log(5.0) / 5));
  CHECK_THROWS_AS(entropy_at(c4, 1.5), DomainError);
  CHECK_THROWS_AS(entropy_at(c4, -0.1), DomainError);
}

TEST_CASE("lambda = f - p ln t / 2 and the limit at p*") {
  for (const auto& [name, g] : regular_catalog()) {
    INFO(name);
    const auto poly = matching_polynomial(g);
    for (double p : {0.2, 0.5, 0.8}) {
      const auto e = entropy_at(poly, p);
      CHECK(e.lambda == doctest::Approx(e.f - 0.5 * p * std::log(e.t)).epsilon(1e-13));
      CHECK(free_energy(poly, e.t) == doctest::Approx(e.lambda).epsilon(1e-10));
    }
    // Extrapolate lambda toward p* = 1 and compare with the exact endpoint.
    const double near = entropy_at(poly, 1 - 1e-7).lambda;
    CHECK(std::abs(near - entropy_at(poly, 1).lambda) < 1e-4);
  }
}

TEST_CASE("derivative identity") {
  const double h = 1e-4;
  for (const auto& [name, g] : regular_catalog()) {
    INFO(name);
    const auto poly = matching_polynomial(g);
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double slope = (entropy_at(poly, p + h).lambda - entropy_at(poly, p - h).lambda) / (2 * h);
      CHECK(std::abs(slope + 0.5 * std::log(activity(poly, p))) <= 1e-5);
    }
  }
}

TEST_CASE("replication invariance") {
  for (const Graph& g : {cycle_graph(6), complete_bipartite(2, 3), hypercube(3)}) {
    const auto one = matching_polynomial(g);
    const auto two = matching_polynomial(disjoint_union(g, g));
    const auto three = matching_polynomial(disjoint_union(disjoint_union(g, g), g));
    for (const Rational& t : {Rational(1, 3), Rational(2), Rational(7, 5)}) {
      CHECK(density(one, t) == density(two, t));
      CHECK(density(one, t) == density(three, t));
    }
    for (double p : {0.2, 0.4, to_double(one.p_star())}) {
      CHECK(entropy_at(two, p).lambda == doctest::Approx(entropy_at(one, p).lambda).epsilon(1e-12));
      CHECK(entropy_at(three, p).lambda == doctest::Approx(entropy_at(one, p).lambda).epsilon(1e-12));
    }
  }
}

TEST_CASE("sandwich bound and concavity") {
  auto graphs = regular_catalog();
  for (auto& extra : biregular_catalog()) graphs.push_back(extra);
  graphs.push_back({"C7", cycle_graph(7)});
  for (const auto& [name, g] : graphs) {
    INFO(name);
    const auto poly = matching_polynomial(g);
    const double v = g.vertex_count();
    for (int k = 0; k <= poly.nu(); ++k) {
      const double p = 2.0 * k / v;
      const double lambda = entropy_at(poly, p).lambda;
      CHECK(std::abs(lambda - log_bigint(poly.m(k)) / v) <= std::log(v) / v + 1e-12);
    }
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(to_double(poly.p_star()) * i / 40.0);
    const auto curve = entropy_curve(poly, grid);
    CHECK(curve.t_monotone);
    for (std::size_t i = 2; i < grid.size(); ++i) {
      const double s1 = (curve.points[i - 1].lambda - curve.points[i - 2].lambda) / (grid[i - 1] - grid[i - 2]);
      const double s2 = (curve.points[i].lambda - curve.points[i - 1].lambda) / (grid[i] - grid[i - 1]);
      CHECK(s2 <= s1 + 1e-9);
    }
  }
}

TEST_CASE("entropy curves") {
  const auto c4 = matching_polynomial(cycle_graph(4));
  auto curve = entropy_curve(c4, {0});
  REQUIRE(curve.points.size() == 1);
  CHECK(curve.points[0].lambda == 0);
  curve = entropy_curve(c4, {0, 4.0 / 7});
  CHECK(curve.points[1].lambda == doctest::Approx(std::log(7.0) / 4));
  curve = entropy_curve(matching_polynomial(cycle_graph(6)), {0, 0.25, 0.5, 0.75, 1});
  CHECK(curve.points.size() == 5);
  CHECK(curve.t_monotone);
}

TEST_CASE("monotone comparison across graphs") {
  // C12 is a 2-lift of C6, so ln M/v of C6 dominates at every t.
  const auto small = matching_polynomial(cycle_graph(6));
  const auto large = matching_polynomial(cycle_graph(12));
  bool dominates = true;
  for (int i = 1; i <= 200; ++i) {
    const Rational t(i, 20);
    dominates = dominates && log_rational(evaluate_M(small, t)) / 6 >= log_rational(evaluate_M(large, t)) / 12;
  }
  REQUIRE(dominates);
  for (int i = 1; i < 50; ++i) {
    const double p = i / 50.0;
    CHECK(entropy_at(small, p).lambda >= entropy_at(large, p).lambda - 1e-9);
  }
}
