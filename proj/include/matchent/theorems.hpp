#pragma once

#include "matchent/certificate.hpp"
#include "matchent/graph.hpp"
#include "matchent/matchpoly.hpp"
#include "matchent/treeformulas.hpp"

#include <vector>

namespace matchent {

/// P(Binomial(n, k/n) = k) = C(n,k) (k/n)^k (1-k/n)^(n-k).
Rational p_mu(int n, int k);
HighReal p_mu_log(int n, int k);

/// exp(N H(k/N)) = N^N / (k^k (N-k)^(N-k)).
Rational entropy_exponential(std::int64_t N, std::int64_t k);

/// exp(2n G_d(k/n)), which is rational.
Rational lmc_exponential(int d, int n, int k);

/// exp(v G_{a,b}(2k/v)) for an (a,b)-biregular graph whose degree-a class
/// has `size_a` vertices; also rational.
Rational biregular_exponential(int a, int b, int size_a, int k);

Certificate verify_schrijver(const Graph& g, const MatchPolyOptions& options = {});
/// m_k >= p_mu(n,k) exp(2n G_d(k/n)).
Certificate verify_lmc(const Graph& g, int k, const MatchPolyOptions& options = {});
/// m_k >= C(n,k)^2 ((d-p)/d)^(n(d-p)) (dp)^(np) with p = k/n.
Certificate verify_lmc_conjecture(const Graph& g, int k, const MatchPolyOptions& options = {});
/// sum_k m_k ((p/d)(1-p/d))^k (1-p)^(2(n-k)) >= (1-p/d)^(nd).
std::vector<Certificate> verify_direct(const Graph& g, const std::vector<Rational>& p_grid,
                                       const MatchPolyOptions& options = {});
/// m_k >= p_mu(|A|, k) exp(v G_{a,b}(2k/v)), |A| the degree-a class.
Certificate verify_biregular(const Graph& g, int k, const MatchPolyOptions& options = {});
/// lambda_G(p) >= tree entropy(p) - 1e-9 on grid points inside the tree's range.
std::vector<Certificate> verify_entropy_dominance(const Graph& g, const TreeParams& params,
                                                  const std::vector<double>& p_grid,
                                                  const MatchPolyOptions& options = {});
/// ln M(G,t) / v >= 1/2 ln S_d(t) - 1e-9.
std::vector<Certificate> verify_integral_inequality(const Graph& g, const std::vector<double>& t_grid,
                                                    const MatchPolyOptions& options = {});
/// ME(G) / v >= tree matching energy - 1e-8.
Certificate verify_matching_energy(const Graph& g, const MatchPolyOptions& options = {});

struct DarrochResult {
  enum class Kind { unique, pair, indeterminate };
  Kind kind = Kind::unique;
  Rational mean;
  int mode = 0;  // the unique mode, or the lower index of the pair
  // Whether the prediction agrees with the actual argmax of m_j t^j.
  bool consistent = true;
  std::vector<int> argmax;
};
DarrochResult darroch_locate(const MatchingPolynomial& poly, const Rational& t);

struct CoefficientDistribution {
  Rational t;
  std::vector<Rational> a;  // a_j = m_j t^j / M(G,t)
  Rational total;
  Rational mean;
};
CoefficientDistribution coefficient_distribution(const MatchingPolynomial& poly, const Rational& t);

/// a_k >= p_mu(nu, k) - 1e-10 at t = t(G, 2k/v).
Certificate verify_hoeffding_coefficient(const Graph& g, int k, const MatchPolyOptions& options = {});

}  // namespace matchent
