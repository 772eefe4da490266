#pragma once

#include "matchent/numeric.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace matchent {

/// The infinite d-regular tree or the (a,b)-biregular tree (a >= b).
struct TreeParams {
  enum class Kind { regular, biregular };
  Kind kind = Kind::regular;
  int d = 0;
  int a = 0;
  int b = 0;

  static TreeParams regular(int d);
  static TreeParams biregular(int a, int b);

  /// Largest coverable vertex fraction: 1, or 2b/(a+b).
  double p_max() const;
  std::string describe() const;
};

namespace detail {

// x * ln(y) with the convention 0 * ln(0) = 0.
template <class Real>
Real xlogy(const Real& x, const Real& y) {
  using std::log;
  if (x == 0) return Real(0);
  return x * log(y);
}

template <class Real>
Real binary_entropy(const Real& q) {
  return -(xlogy(q, q) + xlogy(Real(1 - q), Real(1 - q)));
}

}  // namespace detail

/// Entropy function of the d-regular tree,
///   1/2 (p ln(d/p) + (d-p) ln(1-p/d) - 2(1-p) ln(1-p)),
/// with the endpoint limits taken exactly. Accepts d >= 1 (d = 1 is the
/// perfect-matching graph K2, useful for degenerate verification inputs).
template <class Real = double>
Real entropy_regular(int d, const Real& p) {
  using std::log;
  if (d < 1) throw DomainError("entropy_regular needs d >= 1");
  if (p < 0 || p > 1) throw DomainError("entropy_regular needs 0 <= p <= 1");
  const Real dd(d);
  if (p == 0) return Real(0);
  if (p == 1) {
    // 1/2 ln((d-1)^(d-1) / d^(d-2))
    return (detail::xlogy(Real(dd - 1), Real(dd - 1)) - (dd - 2) * log(dd)) / 2;
  }
  return (p * log(dd / p) + detail::xlogy(Real(dd - p), Real(1 - p / dd)) -
          2 * (1 - p) * log(Real(1 - p))) /
         2;
}

/// Entropy function of the (a,b)-biregular tree in its binary-entropy form
/// for 0 <= p <= 2 min(a,b)/(a+b).
template <class Real = double>
Real entropy_biregular(int a, int b, const Real& p) {
  using std::log;
  if (a < 1 || b < 1) throw DomainError("entropy_biregular needs a, b >= 1");
  const Real ra(a), rb(b), s(a + b);
  const Real limit = 2 * Real(std::min(a, b)) / s;
  if (p < 0 || p > limit) throw DomainError("entropy_biregular needs 0 <= p <= 2 min(a,b)/(a+b)");
  auto clamp01 = [](Real q) { return q > 1 ? Real(1) : q; };
  return ra / s * detail::binary_entropy(clamp01(s / (2 * ra) * p)) +
         rb / s * detail::binary_entropy(clamp01(s / (2 * rb) * p)) + p * log(ra * rb) / 2 -
         ra * rb / s * detail::binary_entropy(clamp01(s / (2 * ra * rb) * p));
}

/// The same function in its four-logarithm form; an independent algebraic
/// route used to cross-check entropy_biregular.
template <class Real = double>
Real entropy_biregular_log_form(int a, int b, const Real& p) {
  using detail::xlogy;
  if (a < 1 || b < 1) throw DomainError("entropy_biregular needs a, b >= 1");
  const Real ra(a), rb(b), s(a + b);
  const Real limit = 2 * Real(std::min(a, b)) / s;
  if (p < 0 || p > limit) throw DomainError("entropy_biregular needs 0 <= p <= 2 min(a,b)/(a+b)");
  if (p == 0) return Real(0);
  const Real ab = ra * rb;
  auto pos = [](Real x) { return x < 0 ? Real(0) : x; };
  return (xlogy(p, Real(2 * ab / (s * p))) +
          xlogy(pos(2 * ab / s - p), pos(1 - s / (2 * ab) * p)) -
          xlogy(pos(2 * ra / s - p), pos(1 - s / (2 * ra) * p)) -
          xlogy(pos(2 * rb / s - p), pos(1 - s / (2 * rb) * p))) /
         2;
}

double density_regular_tree(int d, double t);
double activity_regular_tree(int d, double p);

/// eta_t = (sqrt(1 + 4(d-1)t) - 1) / (2(d-1)t), with eta_0 = 1.
double eta(int d, double t);
/// S_d(t) = eta^-2 ((d-1)/(d-eta))^(d-2); 1/2 ln S_d(t) is the tree's
/// ln M / v at activity t.
double s_function(int d, double t);

double density_biregular_tree(int a, int b, double t);
double activity_biregular_tree(int a, int b, double p);

double density_tree(const TreeParams& tree, double t);
double activity_tree(const TreeParams& tree, double p);
double entropy_tree(const TreeParams& tree, double p);

/// Kesten-McKay density of the d-regular tree's spectral measure.
double kesten_mckay_density(int d, double x);

struct SpectralPoint {
  double density = 0;    // absolutely continuous part at x
  double zero_atom = 0;  // point mass at 0
};

/// Spectral (= matching) measure of the (a,b)-biregular tree. For b = 1 the
/// tree is a finite star and the measure is purely atomic (see
/// biregular_spectral_atoms).
SpectralPoint biregular_spectral_density(int a, int b, double x);

struct Atom {
  double location;
  double mass;
};
std::vector<Atom> biregular_spectral_atoms(int a, int b);

/// Integral of f against the tree's spectral measure (adaptive tanh-sinh
/// quadrature split at the support edges and at 0, plus atoms).
double integrate_tree_measure(const TreeParams& tree, const std::function<double(double)>& f);

/// Closed-walk generating functions of the biregular tree as power series in
/// w = z^2, all truncated to degree J:
///   F_a = 1/(1 - R_a), R_a = (a-1) w F_b   (root has one fewer child)
///   G_a = 1/(1 - a w F_b)                  (full root)
/// and symmetrically for b.
struct WalkGeneratingFunctions {
  std::vector<BigInt> F_a, F_b, R_a, R_b, G_a, G_b;
};
WalkGeneratingFunctions walk_generating_functions(int a, int b, int J);

struct WalkSeries {
  enum class Root { a_root, b_root };
  Root root = Root::a_root;
  std::vector<BigInt> even;  // even[j] = W_{2j}

  /// Closed walks of length `length` from the root (0 for odd lengths).
  BigInt W(int length) const;
};
WalkSeries walk_series(int a, int b, WalkSeries::Root root, int J);

/// Integral of |z| against the d-regular tree's measure:
///   (d/pi) (2 sqrt(d-1) - (d-2) arctan(2 sqrt(d-1)/(d-2))).
double tree_matching_energy(int d);

}  // namespace matchent
