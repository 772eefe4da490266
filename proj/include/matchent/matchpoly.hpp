#pragma once

#include "matchent/graph.hpp"
#include "matchent/numeric.hpp"

#include <vector>

namespace matchent {

/// Default exact-computation size guard: MATCHENT_MAX_VERTICES or 30.
int default_max_vertices();

struct MatchPolyOptions {
  int max_vertices = default_max_vertices();
};

/// Matching counts m_0..m_nu of a graph. m_0 = 1 and m_nu >= 1.
struct MatchingPolynomial {
  std::vector<BigInt> coefficients;
  int vertex_count = 0;

  int nu() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  const BigInt& m(int k) const { return coefficients.at(k); }
  /// Supremum of attainable covered-vertex fractions, 2 nu / v.
  Rational p_star() const;
  friend bool operator==(const MatchingPolynomial&, const MatchingPolynomial&) = default;
};

struct RootMultiplicity {
  double value = 0;
  int multiplicity = 0;
};

/// Zeros of mu(G, x) with multiplicities, sorted ascending.
struct MatchingMeasure {
  std::vector<RootMultiplicity> roots;
  int vertex_count = 0;

  int total_multiplicity() const;
  /// Integral of f against the uniform measure on the zeros.
  template <class F>
  double integrate(F&& f) const {
    double sum = 0;
    for (const auto& r : roots) sum += r.multiplicity * f(r.value);
    return sum / vertex_count;
  }
};

/// Exact matching counts by vertex elimination
///   M(G) = M(G - v) + t * sum_{u ~ v} M(G - v - u)
/// over induced subgraphs, factorised over connected components and memoised
/// on the component's vertex set. Throws TooLargeError past the size guard.
MatchingPolynomial matching_polynomial(const Graph& g, const MatchPolyOptions& options = {});

/// Coefficient convolution, i.e. the matching polynomial of a disjoint union.
MatchingPolynomial convolve(const MatchingPolynomial& a, const MatchingPolynomial& b);

double evaluate_M(const MatchingPolynomial& p, double t);
Rational evaluate_M(const MatchingPolynomial& p, const Rational& t);
/// t * dM/dt at t, exactly.
Rational evaluate_tdM(const MatchingPolynomial& p, const Rational& t);

/// Coefficients of mu(G, x), index = power of x.
std::vector<BigInt> mu_coefficients(const MatchingPolynomial& p);

/// All zeros of mu(G, x): exact square-free decomposition and Sturm
/// isolation on the integer polynomial in y = x^2, then bisection until each
/// root is bracketed to width <= tol. Aborts (std::logic_error) if the root
/// count or the reconstructed polynomial disagrees with mu.
MatchingMeasure matching_measure(const MatchingPolynomial& p, double tol = 1e-12);

/// Power sums p_1..p_max_k of the zeros of mu via Newton's identities.
std::vector<BigInt> power_sums(const MatchingPolynomial& p, int max_k);

/// Sum of |z| over the zeros, with multiplicity.
double matching_energy(const MatchingMeasure& m);

/// Characteristic polynomial det(xI - A) of the adjacency matrix, index =
/// power of x (Faddeev-LeVerrier over the integers).
std::vector<BigInt> characteristic_polynomial(const Graph& g);

/// For a forest, whether mu(G, x) equals the adjacency characteristic
/// polynomial. Throws DomainError on graphs with a cycle.
bool is_tree_spectral_match(const Graph& g);

}  // namespace matchent
