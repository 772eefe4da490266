#include "matchent/treeformulas.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace matchent {

TreeParams TreeParams::regular(int d) {
  if (d < 2) throw DomainError("regular tree needs d >= 2");
  TreeParams p;
  p.kind = Kind::regular;
  p.d = p.a = p.b = d;
  return p;
}

TreeParams TreeParams::biregular(int a, int b) {
  if (b < 1 || a < b) throw DomainError("biregular tree needs a >= b >= 1");
  TreeParams p;
  p.kind = Kind::biregular;
  p.a = a;
  p.b = b;
  return p;
}

double TreeParams::p_max() const {
  return kind == Kind::regular ? 1.0 : 2.0 * b / (a + b);
}

std::string TreeParams::describe() const {
  if (kind == Kind::regular) return "T_" + std::to_string(d);
  return "T_" + std::to_string(a) + "," + std::to_string(b);
}

namespace {

void require_regular(int d) {
  if (d < 2) throw DomainError("regular tree needs d >= 2");
}

void require_biregular(int a, int b) {
  if (b < 1 || a < b) throw DomainError("biregular tree needs a >= b >= 1");
}

void require_activity(double t) {
  if (!(t >= 0)) throw DomainError("activity must be non-negative");
}

}  // namespace

double eta(int d, double t) {
  require_regular(d);
  require_activity(t);
  if (std::isinf(t)) return 0;
  return 2 / (1 + std::sqrt(1 + 4.0 * (d - 1) * t));
}

double density_regular_tree(int d, double t) {
  const double e = eta(d, t);
  if (std::isinf(t)) return 1;
  const double root = std::sqrt(1 + 4.0 * (d - 1) * t);
  const double one_minus_eta = 4.0 * (d - 1) * t / ((1 + root) * (1 + root));
  return d * one_minus_eta / (d - e);
}

double activity_regular_tree(int d, double p) {
  require_regular(d);
  if (p < 0 || p > 1) throw DomainError("density must lie in [0, 1]");
  if (p == 1) return std::numeric_limits<double>::infinity();
  return p * (d - p) / (double(d) * d * (1 - p) * (1 - p));
}

double s_function(int d, double t) {
  const double e = eta(d, t);
  return std::pow((d - 1) / (d - e), d - 2) / (e * e);
}

double density_biregular_tree(int a, int b, double t) {
  require_biregular(a, b);
  require_activity(t);
  if (std::isinf(t)) return 2.0 * b / (a + b);
  const double ab = double(a) * b, s = a + b;
  const double u = (2.0 * a + 2.0 * b - 4) * t + double(a - b) * (a - b) * t * t;
  const double numerator = 2 * ab * t - (2 * ab / s) * u / (1 + std::sqrt(1 + u));
  return numerator / (2 * ab * t + 2);
}

double activity_biregular_tree(int a, int b, double p) {
  require_biregular(a, b);
  const double s = a + b, ab = double(a) * b;
  const double limit = 2.0 * b / s;
  if (p < 0 || p > limit) throw DomainError("density must lie in [0, 2b/(a+b)]");
  if (p == limit) return std::numeric_limits<double>::infinity();
  return s / (2 * ab) * p * (1 - s * p / (2 * ab)) /
         ((1 - s * p / (2.0 * a)) * (1 - s * p / (2.0 * b)));
}

double density_tree(const TreeParams& tree, double t) {
  return tree.kind == TreeParams::Kind::regular ? density_regular_tree(tree.d, t)
                                                : density_biregular_tree(tree.a, tree.b, t);
}

double activity_tree(const TreeParams& tree, double p) {
  return tree.kind == TreeParams::Kind::regular ? activity_regular_tree(tree.d, p)
                                                : activity_biregular_tree(tree.a, tree.b, p);
}

double entropy_tree(const TreeParams& tree, double p) {
  return tree.kind == TreeParams::Kind::regular ? entropy_regular(tree.d, p)
                                                : entropy_biregular(tree.a, tree.b, p);
}

double kesten_mckay_density(int d, double x) {
  require_regular(d);
  const double r2 = 4.0 * (d - 1);
  if (x * x >= r2) return 0;
  return d * std::sqrt(r2 - x * x) / (2 * std::numbers::pi * (double(d) * d - x * x));
}

SpectralPoint biregular_spectral_density(int a, int b, double x) {
  require_biregular(a, b);
  SpectralPoint out;
  out.zero_atom = double(a - b) / (a + b);
  if (b == 1) {
    out.zero_atom = double(a - 1) / (a + 1);
    return out;
  }
  if (a == b) {
    out.density = kesten_mckay_density(a, x);
    return out;
  }
  const double s = std::sqrt(double(a - 1) * (b - 1));
  const double lo = std::abs(std::sqrt(a - 1.0) - std::sqrt(b - 1.0));
  const double hi = std::sqrt(a - 1.0) + std::sqrt(b - 1.0);
  const double ax = std::abs(x);
  if (ax <= lo || ax >= hi) return out;
  const double ab = double(a) * b, x2 = x * x;
  const double inner = -(x2 - ab + (s - 1) * (s - 1)) * (x2 - ab + (s + 1) * (s + 1));
  if (inner <= 0) return out;
  out.density = ab * std::sqrt(inner) / (std::numbers::pi * (a + b) * (ab - x2) * ax);
  return out;
}

std::vector<Atom> biregular_spectral_atoms(int a, int b) {
  require_biregular(a, b);
  if (b == 1) {
    const double root = std::sqrt(double(a));
    return {{-root, 1.0 / (a + 1)}, {0.0, double(a - 1) / (a + 1)}, {root, 1.0 / (a + 1)}};
  }
  if (a == b) return {};
  return {{0.0, double(a - b) / (a + b)}};
}

double integrate_tree_measure(const TreeParams& tree, const std::function<double(double)>& f) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double tol = 1e-12;
  auto piece = [&](auto density, double lo, double hi) {
    if (hi <= lo) return 0.0;
    return integrator.integrate([&](double x) { return density(x) * f(x); }, lo, hi, tol);
  };
  if (tree.kind == TreeParams::Kind::regular) {
    // xc is the signed distance to the nearest endpoint.
    const int d = tree.d;
    const double r = 2 * std::sqrt(d - 1.0);
    return integrator.integrate(
        [&](double x, double xc) {
          const double gap = xc < 0 ? -xc * (2 * r + xc) : xc > 0 ? xc * (2 * r - xc) : r * r - x * x;
          if (gap <= 0) return 0.0;
          return d * std::sqrt(gap) / (2 * std::numbers::pi * (gap + double(d - 2) * (d - 2))) * f(x);
        },
        -r, r, tol);
  }
  const int a = tree.a, b = tree.b;
  double total = 0;
  for (const Atom& atom : biregular_spectral_atoms(a, b)) total += atom.mass * f(atom.location);
  if (b == 1) return total;
  if (a == b) return total + integrate_tree_measure(TreeParams::regular(a), f);
  const double lo = std::abs(std::sqrt(a - 1.0) - std::sqrt(b - 1.0));
  const double hi = std::sqrt(a - 1.0) + std::sqrt(b - 1.0);
  auto rho = [&](double x) { return biregular_spectral_density(a, b, x).density; };
  return total + piece(rho, -hi, -lo) + piece(rho, lo, hi);
}

namespace {

using Series = std::vector<BigInt>;

// 1 / (1 - x) for a series with x_0 = 0.
Series geometric(const Series& x, int degree) {
  Series out(degree + 1, 0);
  out[0] = 1;
  for (int n = 1; n <= degree; ++n)
    for (int i = 1; i <= n; ++i) out[n] += x[i] * out[n - i];
  return out;
}

// c * w * s, truncated.
Series shift_scale(const Series& s, long long c, int degree) {
  Series out(degree + 1, 0);
  for (int i = 0; i + 1 <= degree; ++i) out[i + 1] = s[i] * c;
  return out;
}

}  // namespace

WalkGeneratingFunctions walk_generating_functions(int a, int b, int J) {
  if (a < 1 || b < 1) throw DomainError("walk series needs a, b >= 1");
  if (J < 0) throw DomainError("walk series needs J >= 0");
  WalkGeneratingFunctions g;
  g.F_a = g.F_b = Series(J + 1, 0);
  g.F_a[0] = g.F_b[0] = 1;
  // Each pass fixes one more coefficient of the coupled system.
  for (int pass = 0; pass <= J; ++pass) {
    g.R_a = shift_scale(g.F_b, a - 1, J);
    g.R_b = shift_scale(g.F_a, b - 1, J);
    g.F_a = geometric(g.R_a, J);
    g.F_b = geometric(g.R_b, J);
  }
  g.R_a = shift_scale(g.F_b, a - 1, J);
  g.R_b = shift_scale(g.F_a, b - 1, J);
  g.G_a = geometric(shift_scale(g.F_b, a, J), J);
  g.G_b = geometric(shift_scale(g.F_a, b, J), J);
  return g;
}

WalkSeries walk_series(int a, int b, WalkSeries::Root root, int J) {
  auto g = walk_generating_functions(a, b, J);
  WalkSeries w;
  w.root = root;
  w.even = root == WalkSeries::Root::a_root ? g.G_a : g.G_b;
  return w;
}

BigInt WalkSeries::W(int length) const {
  if (length < 0 || length % 2) return 0;
  return even.at(length / 2);
}

double tree_matching_energy(int d) {
  require_regular(d);
  const double r = std::sqrt(d - 1.0);
  return d / std::numbers::pi * (2 * r - (d - 2) * std::atan(2 * r / (d - 2)));
}

}  // namespace matchent
