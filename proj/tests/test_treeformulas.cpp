#include "matchent/catalog.hpp"
#include "matchent/matchpoly.hpp"
#include "matchent/treeformulas.hpp"
#include "oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace matchent;

namespace {

// Independent quadrature (Gauss-Kronrod after the substitution x = R sin u,
// which removes the square-root endpoint behaviour of the densities).
template <class F>
double gk_integral(F&& f, double lo, double hi) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-13);
}

double km_moment(int d, const std::function<double(double)>& f) {
  const double r = 2 * std::sqrt(d - 1.0);
  return gk_integral(
      [&](double u) {
        const double x = r * std::sin(u);
        const double c = r * std::cos(u);
        return d * c * c / (2 * std::numbers::pi * (c * c + (d - 2) * (d - 2))) * f(x);
      },
      -std::numbers::pi / 2, std::numbers::pi / 2);
}

}  // namespace

TEST_CASE("tree params") {
  CHECK(TreeParams::regular(3).p_max() == 1);
  CHECK(TreeParams::biregular(3, 2).p_max() == doctest::Approx(0.8));
  CHECK_THROWS_AS(TreeParams::regular(1), DomainError);
  CHECK_THROWS_AS(TreeParams::biregular(2, 3), DomainError);
  CHECK_THROWS_AS(TreeParams::biregular(2, 0), DomainError);
}

TEST_CASE("regular entropy values") {
  CHECK(entropy_regular(3, 0.0) == 0);
  // 2n G_2(2/3) = 4 ln 2 at n = 3.
  CHECK(6 * entropy_regular(2, 2.0 / 3) == doctest::Approx(4 * std::log(2.0)).epsilon(1e-14));
  CHECK(entropy_regular(3, 1.0) == doctest::Approx(0.5 * std::log(4.0 / 3)).epsilon(1e-15));
  CHECK(entropy_regular(2, 1.0) == 0);
  CHECK(entropy_regular(3, 1 - 1e-12) == doctest::Approx(entropy_regular(3, 1.0)).epsilon(1e-9));
  CHECK(entropy_regular(4, 0.5) ==
        doctest::Approx(0.5 * (0.5 * std::log(8.0) + 3.5 * std::log(0.875) - std::log(0.5))).epsilon(1e-14));
  CHECK_THROWS_AS(entropy_regular(3, 1.5), DomainError);
  // High precision agrees with double.
  CHECK(static_cast<double>(entropy_regular<HighReal>(5, HighReal("0.3"))) ==
        doctest::Approx(entropy_regular(5, 0.3)).epsilon(1e-15));
}

TEST_CASE("regular tree density, activity, eta and S") {
  for (int d : {2, 3, 4, 7}) {
    for (double p : {0.0, 0.1, 0.5, 0.9, 0.999}) {
      const double t = activity_regular_tree(d, p);
      CHECK(density_regular_tree(d, t) == doctest::Approx(p).epsilon(1e-12));
      const double e = eta(d, t);
      CHECK(e == doctest::Approx((1 - p) / (1 - p / d)).epsilon(1e-12));
      CHECK(s_function(d, t) == doctest::Approx(std::pow(1 - p / d, d) / ((1 - p) * (1 - p))).epsilon(1e-10));
      // Derivative of the entropy is -1/2 ln t.
      if (p > 0.05 && p < 0.95) {
        const double h = 1e-5;
        const double slope = (entropy_regular(d, p + h) - entropy_regular(d, p - h)) / (2 * h);
        CHECK(slope == doctest::Approx(-0.5 * std::log(t)).epsilon(1e-6));
      }
      // G_d(p) = 1/2 ln S_d(t) - 1/2 p ln t
      if (p > 0) CHECK(entropy_regular(d, p) == doctest::Approx(0.5 * std::log(s_function(d, t)) - 0.5 * p * std::log(t)).epsilon(1e-10));
    }
  }
  CHECK(density_regular_tree(2, 1) == doctest::Approx((10 - 2 * std::sqrt(5.0)) / 10).epsilon(1e-14));
  CHECK(activity_regular_tree(3, 0.5) == doctest::Approx(5.0 / 9));
  CHECK(s_function(3, 5.0 / 9) == doctest::Approx(2.314814814814815).epsilon(1e-14));
  CHECK(eta(3, 0) == 1);
  CHECK(density_regular_tree(3, 0) == 0);
  CHECK(std::isinf(activity_regular_tree(3, 1)));
  CHECK(density_regular_tree(3, 1e-9) == doctest::Approx(2e-9).epsilon(1e-6));
}

TEST_CASE("biregular entropy forms agree") {
  for (auto [a, b] : {std::pair{2, 2}, {3, 2}, {4, 3}, {5, 1}, {3, 3}}) {
    const double pmax = 2.0 * b / (a + b);
    for (int i = 0; i <= 20; ++i) {
      const double p = pmax * i / 20;
      CHECK(entropy_biregular(a, b, p) == doctest::Approx(entropy_biregular_log_form(a, b, p)).epsilon(1e-12));
    }
    // a = b reduces to the regular formula.
    if (a == b)
      for (double p : {0.2, 0.6, 1.0}) CHECK(entropy_biregular(a, b, p) == doctest::Approx(entropy_regular(a, p)).epsilon(1e-13));
    for (double p : {0.1 * pmax, 0.5 * pmax, 0.9 * pmax}) {
      const double t = activity_biregular_tree(a, b, p);
      CHECK(density_biregular_tree(a, b, t) == doctest::Approx(p).epsilon(1e-12));
      const double h = 1e-6;
      const double slope = (entropy_biregular(a, b, p + h) - entropy_biregular(a, b, p - h)) / (2 * h);
      CHECK(slope == doctest::Approx(-0.5 * std::log(t)).epsilon(1e-5));
    }
    CHECK(density_biregular_tree(a, b, 1e24) == doctest::Approx(pmax).epsilon(1e-9));
  }
  CHECK(density_biregular_tree(3, 3, 0.7) == doctest::Approx(density_regular_tree(3, 0.7)).epsilon(1e-14));
  CHECK_THROWS_AS(entropy_biregular(3, 2, 0.9), DomainError);
}

TEST_CASE("Kesten-McKay measure by quadrature") {
  for (int d : {2, 3, 4, 6}) {
    CHECK(km_moment(d, [](double) { return 1.0; }) == doctest::Approx(1).epsilon(1e-9));
    CHECK(integrate_tree_measure(TreeParams::regular(d), [](double) { return 1.0; }) == doctest::Approx(1).epsilon(1e-9));
  }
  // Moments are closed-walk counts of the tree.
  const auto walks = oracle::tree_closed_walks(3, 3, true, 6);
  for (int j = 0; j <= 6; ++j) {
    const double moment = km_moment(3, [j](double x) { return std::pow(x, 2 * j); });
    CHECK(moment == doctest::Approx(to_double(Rational(walks[j]))).epsilon(1e-9));
    const double library = integrate_tree_measure(TreeParams::regular(3), [j](double x) { return std::pow(x, 2 * j); });
    CHECK(library == doctest::Approx(moment).epsilon(1e-9));
  }
  for (int d : {2, 3, 5})
    for (double t : {0.5, 1.0, 2.0})
      CHECK(km_moment(d, [t](double x) { return 0.5 * std::log1p(t * x * x); }) ==
            doctest::Approx(0.5 * std::log(s_function(d, t))).epsilon(1e-9));
}

TEST_CASE("biregular spectral measure") {
  for (auto [a, b] : {std::pair{3, 2}, {4, 3}, {5, 2}, {4, 4}, {3, 1}}) {
    INFO(a << "," << b);
    const TreeParams tree = TreeParams::biregular(a, b);
    CHECK(integrate_tree_measure(tree, [](double) { return 1.0; }) == doctest::Approx(1).epsilon(1e-9));
    const auto wa = oracle::tree_closed_walks(a, b, true, 5);
    const auto wb = oracle::tree_closed_walks(a, b, false, 5);
    for (int j = 0; j <= 5; ++j) {
      const double expected =
          (double(b) * to_double(Rational(wa[j])) + double(a) * to_double(Rational(wb[j]))) / (a + b);
      CHECK(integrate_tree_measure(tree, [j](double x) { return std::pow(x, 2 * j); }) ==
            doctest::Approx(expected).epsilon(1e-8));
    }
  }
  CHECK(biregular_spectral_density(3, 2, 0).zero_atom == doctest::Approx(0.2));
  CHECK(biregular_spectral_density(3, 2, 0).density == 0);
  CHECK(biregular_spectral_density(3, 3, 1.0).density == doctest::Approx(kesten_mckay_density(3, 1.0)));
  CHECK(biregular_spectral_density(3, 2, 5.0).density == 0);
}

TEST_CASE("closed-walk series") {
  for (auto [a, b] : {std::pair{2, 2}, {3, 3}, {2, 3}, {3, 4}}) {
    const auto fa = oracle::tree_closed_walks(a, b, true, 8);
    const auto fb = oracle::tree_closed_walks(a, b, false, 8);
    CHECK(walk_series(a, b, WalkSeries::Root::a_root, 8).even == fa);
    CHECK(walk_series(a, b, WalkSeries::Root::b_root, 8).even == fb);
    // G_a (1 - a w F_b) = 1 exactly.
    const auto g = walk_generating_functions(a, b, 8);
    for (int n = 0; n <= 8; ++n) {
      BigInt c = g.G_a[n];
      for (int i = 1; i <= n; ++i) c -= a * g.F_b[i - 1] * g.G_a[n - i];
      CHECK(c == (n == 0 ? 1 : 0));
    }
  }
  const auto w = walk_series(3, 3, WalkSeries::Root::a_root, 4);
  CHECK(w.W(2) == 3);
  CHECK(w.W(4) == 15);
  CHECK(w.W(3) == 0);
}

TEST_CASE("tree matching energy") {
  CHECK(tree_matching_energy(2) == doctest::Approx(4 / std::numbers::pi).epsilon(1e-14));
  for (int d : {2, 3, 4, 8})
    CHECK(tree_matching_energy(d) == doctest::Approx(km_moment(d, [](double x) { return std::abs(x); })).epsilon(1e-9));
}
