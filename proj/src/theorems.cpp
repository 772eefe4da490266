#include "matchent/theorems.hpp"

#include "matchent/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace matchent {

namespace {

// Above this many slots the exact rationals get large; switch to log space.
constexpr std::int64_t kExactSlotLimit = 600;

struct RegularInput {
  int d = 0;
  int n = 0;
};

RegularInput require_regular_bipartite(const Graph& g) {
  const auto profile = degree_profile(g);
  if (!g.is_bipartite() || !profile.is_regular || g.vertex_count() == 0)
    throw DomainError("expected a non-empty regular bipartite graph");
  return {profile.degree, g.vertex_count() / 2};
}

Certificate& tag(Certificate& c, const Graph& g) {
  c.inputs.insert(c.inputs.begin(), {"graph", graph_hash(g)});
  return c;
}

HighReal xlog(const HighReal& x, const HighReal& y) {
  if (x == 0) return 0;
  return x * boost::multiprecision::log(y);
}

}  // namespace

Rational p_mu(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("p_mu needs 0 <= k <= n");
  if (n == 0) return 1;
  return Rational(binomial(n, k)) * rational_pow(Rational(k, n), k) * rational_pow(Rational(n - k, n), n - k);
}

HighReal p_mu_log(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("p_mu needs 0 <= k <= n");
  if (n == 0) return 0;
  const HighReal nn(n), kk(k);
  return log_high(Rational(binomial(n, k))) + xlog(kk, kk / nn) + xlog(HighReal(nn - kk), HighReal((nn - kk) / nn));
}

Rational entropy_exponential(std::int64_t N, std::int64_t k) {
  if (k < 0 || k > N) throw DomainError("entropy_exponential needs 0 <= k <= N");
  auto pw = [](std::int64_t base, std::int64_t e) -> BigInt {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
  };
  return Rational(pw(N, N), pw(k, k) * pw(N - k, N - k));
}

Rational lmc_exponential(int d, int n, int k) {
  if (d < 1 || n < 1 || k < 0 || k > n) throw DomainError("lmc_exponential needs d, n >= 1 and 0 <= k <= n");
  const std::int64_t dn = std::int64_t(d) * n;
  return rational_pow(Rational(dn, k == 0 ? 1 : k), k) * rational_pow(Rational(dn - k, dn), dn - k) *
         rational_pow(Rational(n, n == k ? 1 : n - k), 2 * std::int64_t(n - k));
}

Rational biregular_exponential(int a, int b, int size_a, int k) {
  if (a < 1 || b < 1 || size_a < 1) throw DomainError("biregular_exponential needs a, b, |A| >= 1");
  if ((std::int64_t(a) * size_a) % b) throw DomainError("class sizes are inconsistent with (a, b)");
  const std::int64_t size_b = std::int64_t(a) * size_a / b;
  const std::int64_t edges = std::int64_t(a) * size_a;
  if (k < 0 || k > std::min<std::int64_t>(size_a, size_b)) throw DomainError("k exceeds the smaller class");
  return entropy_exponential(size_b, k) * entropy_exponential(size_a, k) *
         rational_pow(Rational(std::int64_t(a) * b), k) / entropy_exponential(edges, k);
}

Certificate verify_schrijver(const Graph& g, const MatchPolyOptions& options) {
  const auto [d, n] = require_regular_bipartite(g);
  const auto poly = matching_polynomial(g, options);
  const Rational base = Rational(rational_pow(Rational(d - 1), d - 1)) / rational_pow(Rational(d), d - 2);
  const Rational lhs = poly.nu() == n ? Rational(poly.m(n)) : Rational(0);
  Certificate c = exact_certificate("schrijver", lhs, rational_pow(base, n));
  if (poly.nu() != n) c.note = "no perfect matching";
  c.with("d", std::to_string(d)).with("n", std::to_string(n));
  return tag(c, g);
}

Certificate verify_lmc(const Graph& g, int k, const MatchPolyOptions& options) {
  const auto [d, n] = require_regular_bipartite(g);
  if (k < 0 || k > n) throw DomainError("verify_lmc needs 0 <= k <= n");
  const auto poly = matching_polynomial(g, options);
  const Rational lhs = k <= poly.nu() ? Rational(poly.m(k)) : Rational(0);
  Certificate c;
  if (std::int64_t(d) * n <= kExactSlotLimit) {
    c = exact_certificate("lmc", lhs, p_mu(n, k) * lmc_exponential(d, n, k));
  } else {
    const HighReal p = HighReal(k) / n;
    const HighReal log_rhs = p_mu_log(n, k) + 2 * HighReal(n) * entropy_regular<HighReal>(d, p);
    const HighReal rhs = boost::multiprecision::exp(log_rhs);
    const double bound = static_cast<double>(rhs * HighReal("1e-80"));
    c = real_certificate("lmc", HighReal(lhs), rhs, bound, bound);
    c.lhs_exact = lhs;
  }
  c.with("d", std::to_string(d)).with("n", std::to_string(n)).with("k", std::to_string(k));
  return tag(c, g);
}

Certificate verify_lmc_conjecture(const Graph& g, int k, const MatchPolyOptions& options) {
  const auto [d, n] = require_regular_bipartite(g);
  if (k < 0 || k > n) throw DomainError("verify_lmc_conjecture needs 0 <= k <= n");
  const auto poly = matching_polynomial(g, options);
  const Rational lhs = k <= poly.nu() ? Rational(poly.m(k)) : Rational(0);
  // ((d-p)/d)^(n(d-p)) = ((dn-k)/(dn))^(dn-k), (dp)^(np) = (dk/n)^k.
  const std::int64_t dn = std::int64_t(d) * n;
  const BigInt c_nk = binomial(n, k);
  const Rational rhs = Rational(c_nk * c_nk) * rational_pow(Rational(dn - k, dn), dn - k) *
                       rational_pow(Rational(std::int64_t(d) * k, n), k);
  Certificate c = exact_certificate("lmc-conjecture", lhs, rhs);
  c.with("d", std::to_string(d)).with("n", std::to_string(n)).with("k", std::to_string(k));
  return tag(c, g);
}

std::vector<Certificate> verify_direct(const Graph& g, const std::vector<Rational>& p_grid,
                                       const MatchPolyOptions& options) {
  const auto [d, n] = require_regular_bipartite(g);
  const auto poly = matching_polynomial(g, options);
  std::vector<Certificate> out;
  for (const Rational& p : p_grid) {
    if (p < 0 || p > 1) throw DomainError("verify_direct needs 0 <= p <= 1");
    const Rational q = p / d;
    const Rational x = q * (1 - q);
    Rational lhs = 0;
    for (int k = 0; k <= poly.nu(); ++k)
      lhs += Rational(poly.m(k)) * rational_pow(x, k) * rational_pow(Rational(1 - p), 2 * std::int64_t(n - k));
    const Rational rhs = rational_pow(Rational(1 - q), std::int64_t(n) * d);
    Certificate c = exact_certificate("direct", lhs, rhs);
    c.with("d", std::to_string(d)).with("n", std::to_string(n)).with("p", to_string(p));
    out.push_back(std::move(tag(c, g)));
  }
  return out;
}

Certificate verify_biregular(const Graph& g, int k, const MatchPolyOptions& options) {
  const auto profile = degree_profile(g);
  if (!g.is_bipartite() || !profile.is_biregular || profile.b < 1)
    throw DomainError("expected a biregular bipartite graph without isolated vertices");
  const int a = profile.a, b = profile.b;
  const int size_a = profile.class_a_size();
  if (k < 0 || k > size_a) throw DomainError("verify_biregular needs 0 <= k <= |A|");
  const auto poly = matching_polynomial(g, options);
  const Rational lhs = k <= poly.nu() ? Rational(poly.m(k)) : Rational(0);
  Certificate c;
  if (std::int64_t(a) * size_a <= kExactSlotLimit) {
    c = exact_certificate("biregular", lhs, p_mu(size_a, k) * biregular_exponential(a, b, size_a, k));
  } else {
    const HighReal p = HighReal(2 * k) / g.vertex_count();
    const HighReal log_rhs =
        p_mu_log(size_a, k) + HighReal(g.vertex_count()) * entropy_biregular<HighReal>(a, b, p);
    const HighReal rhs = boost::multiprecision::exp(log_rhs);
    const double bound = static_cast<double>(rhs * HighReal("1e-80"));
    c = real_certificate("biregular", HighReal(lhs), rhs, bound, bound);
    c.lhs_exact = lhs;
  }
  c.with("a", std::to_string(a)).with("b", std::to_string(b)).with("A", std::to_string(size_a))
      .with("k", std::to_string(k));
  return tag(c, g);
}

std::vector<Certificate> verify_entropy_dominance(const Graph& g, const TreeParams& params,
                                                  const std::vector<double>& p_grid,
                                                  const MatchPolyOptions& options) {
  const auto profile = degree_profile(g);
  if (!g.is_bipartite()) throw DomainError("entropy dominance needs a bipartite graph");
  if (params.kind == TreeParams::Kind::regular) {
    if (!profile.is_regular || profile.degree != params.d)
      throw DomainError("graph is not " + std::to_string(params.d) + "-regular");
  } else if (!profile.is_biregular || profile.a != params.a || profile.b != params.b) {
    throw DomainError("graph is not (" + std::to_string(params.a) + "," + std::to_string(params.b) + ")-biregular");
  }
  const auto poly = matching_polynomial(g, options);
  std::vector<Certificate> out;
  for (double p : p_grid) {
    if (p < 0 || p > params.p_max()) continue;
    const auto point = entropy_at(poly, p);
    const HighReal tree = params.kind == TreeParams::Kind::regular
                              ? entropy_regular<HighReal>(params.d, HighReal(p))
                              : entropy_biregular<HighReal>(params.a, params.b, HighReal(p));
    Certificate c = real_certificate("entropy-dominance", HighReal(point.lambda), tree, 1e-9, 1e-11);
    c.with("tree", params.describe()).with("p", to_decimal(HighReal(p), 17));
    out.push_back(std::move(tag(c, g)));
  }
  return out;
}

std::vector<Certificate> verify_integral_inequality(const Graph& g, const std::vector<double>& t_grid,
                                                    const MatchPolyOptions& options) {
  const auto [d, n] = require_regular_bipartite(g);
  const auto poly = matching_polynomial(g, options);
  std::vector<Certificate> out;
  for (double t : t_grid) {
    if (!(t >= 0) || std::isinf(t)) throw DomainError("integral inequality needs finite t >= 0");
    const HighReal lhs = log_high(evaluate_M(poly, from_double(t))) / g.vertex_count();
    const HighReal rhs = HighReal(0.5 * std::log(s_function(d, t)));
    Certificate c = real_certificate("integral", lhs, rhs, 1e-9, 1e-14);
    c.with("d", std::to_string(d)).with("t", to_decimal(HighReal(t), 17));
    out.push_back(std::move(tag(c, g)));
  }
  return out;
}

Certificate verify_matching_energy(const Graph& g, const MatchPolyOptions& options) {
  const auto [d, n] = require_regular_bipartite(g);
  const auto measure = matching_measure(matching_polynomial(g, options));
  const double per_vertex = matching_energy(measure) / g.vertex_count();
  Certificate c = real_certificate("energy", HighReal(per_vertex), HighReal(tree_matching_energy(d)), 1e-8, 1e-10);
  c.with("d", std::to_string(d));
  return tag(c, g);
}

CoefficientDistribution coefficient_distribution(const MatchingPolynomial& poly, const Rational& t) {
  if (t < 0) throw DomainError("activity must be non-negative");
  CoefficientDistribution out;
  out.t = t;
  const Rational M = evaluate_M(poly, t);
  Rational power = 1;
  for (int j = 0; j <= poly.nu(); ++j) {
    out.a.push_back(Rational(poly.m(j)) * power / M);
    out.total += out.a.back();
    out.mean += j * out.a.back();
    power *= t;
  }
  return out;
}

DarrochResult darroch_locate(const MatchingPolynomial& poly, const Rational& t) {
  if (t <= 0) throw DomainError("darroch_locate needs t > 0");
  DarrochResult r;
  const int n = poly.nu();
  std::vector<Rational> c;
  Rational power = 1, total = 0, weighted = 0;
  for (int j = 0; j <= n; ++j) {
    c.push_back(Rational(poly.m(j)) * power);
    total += c.back();
    weighted += j * c.back();
    power *= t;
  }
  r.mean = weighted / total;
  const Rational best = *std::max_element(c.begin(), c.end());
  for (int j = 0; j <= n; ++j)
    if (c[j] == best) r.argmax.push_back(j);

  const BigInt floor_mean = boost::multiprecision::numerator(r.mean) / boost::multiprecision::denominator(r.mean);
  const int k = static_cast<int>(floor_mean);
  const Rational frac = r.mean - k;
  r.mode = k;
  if (k >= n || frac < Rational(1, k + 2)) {
    r.kind = DarrochResult::Kind::unique;
  } else if (frac == Rational(1, k + 2) || frac == 1 - Rational(1, n - k + 1)) {
    r.kind = DarrochResult::Kind::indeterminate;
  } else if (frac > 1 - Rational(1, n - k + 1)) {
    r.kind = DarrochResult::Kind::unique;
    r.mode = k + 1;
  } else {
    r.kind = DarrochResult::Kind::pair;
  }
  switch (r.kind) {
    case DarrochResult::Kind::unique:
      r.consistent = r.argmax == std::vector<int>{r.mode};
      break;
    case DarrochResult::Kind::pair:
      r.consistent = std::all_of(r.argmax.begin(), r.argmax.end(), [&](int j) { return j == k || j == k + 1; });
      break;
    case DarrochResult::Kind::indeterminate:
      r.consistent = true;
      break;
  }
  return r;
}

Certificate verify_hoeffding_coefficient(const Graph& g, int k, const MatchPolyOptions& options) {
  const auto poly = matching_polynomial(g, options);
  if (g.vertex_count() == 0) throw DomainError("empty graph");
  const double p = 2.0 * k / g.vertex_count();
  if (k < 0 || !(Rational(2 * k, g.vertex_count()) < poly.p_star()))
    throw DomainError("p = 2k/v must lie in [0, p*) with p* = " + to_string(poly.p_star()));
  const Rational t = from_double(activity(poly, p));
  const auto dist = coefficient_distribution(poly, t);
  const Rational bound = p_mu(poly.nu(), k);
  Certificate c;
  c.claim = "hoeffding";
  c.lhs_exact = dist.a[k];
  c.rhs_exact = bound;
  c.lhs = HighReal(dist.a[k]);
  c.rhs = HighReal(bound);
  c.tolerance = 1e-10;
  c.error_bound = 1e-10;
  const bool mean_ok = boost::multiprecision::abs(dist.mean - k) <= Rational(1, 10'000'000'000LL);
  c.pass = dist.total == 1 && mean_ok && c.lhs - c.rhs >= -HighReal(c.tolerance);
  c.note = "t = t(G, 2k/v) rounded to double; mean " + to_decimal(dist.mean, 17);
  c.with("k", std::to_string(k)).with("n", std::to_string(poly.nu())).with("t", to_decimal(t, 17));
  return tag(c, g);
}

}  // namespace matchent
