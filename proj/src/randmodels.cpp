#include "matchent/randmodels.hpp"

#include "matchent/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace matchent {

ConfigModelParams ConfigModelParams::regular(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 1) throw DomainError("configuration model needs d, n >= 1");
  ConfigModelParams p;
  p.kind = Kind::regular;
  p.d = p.a = p.b = d;
  p.n = n;
  p.seed = seed;
  return p;
}

ConfigModelParams ConfigModelParams::biregular(int a, int b, int n, std::uint64_t seed) {
  if (a < 1 || b < 1 || n < 1) throw DomainError("configuration model needs a, b, n >= 1");
  ConfigModelParams p;
  p.kind = Kind::biregular;
  p.a = a;
  p.b = b;
  p.n = n;
  p.seed = seed;
  return p;
}

int ConfigModelParams::vertex_count() const {
  return kind == Kind::regular ? 2 * n : (a + b) * n;
}

int ConfigModelParams::slot_count() const {
  return kind == Kind::regular ? d * n : a * b * n;
}

Graph pairing_graph(const ConfigModelParams& params, const std::vector<int>& perm) {
  const int slots = params.slot_count();
  if (static_cast<int>(perm.size()) != slots) throw DomainError("pairing has the wrong length");
  std::vector<Edge> edges;
  edges.reserve(slots);
  if (params.kind == ConfigModelParams::Kind::regular) {
    for (int s = 0; s < slots; ++s) edges.push_back({s / params.d, params.n + perm[s] / params.d});
  } else {
    const int class_a = params.b * params.n;
    for (int s = 0; s < slots; ++s) edges.push_back({s / params.a, class_a + perm[s] / params.b});
  }
  return Graph(params.vertex_count(), std::move(edges));
}

Graph sample(const ConfigModelParams& params, std::mt19937_64& rng) {
  std::vector<int> perm(params.slot_count());
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(perm[i], perm[pick(rng)]);
  }
  return pairing_graph(params, perm);
}

Graph sample(const ConfigModelParams& params) {
  std::mt19937_64 rng(params.seed);
  return sample(params, rng);
}

Rational expected_mk_regular(int d, int n, int k) {
  if (d < 1 || n < 1) throw DomainError("expected_mk_regular needs d, n >= 1");
  if (k < 0 || k > n) throw DomainError("expected_mk_regular needs 0 <= k <= n");
  BigInt c = binomial(n, k);
  BigInt num = c * c * boost::multiprecision::pow(BigInt(d), 2 * k);
  return Rational(num, binomial(std::int64_t(d) * n, k));
}

Rational expected_mk_biregular(int a, int b, int n, int k) {
  if (a < 1 || b < 1 || n < 1) throw DomainError("expected_mk_biregular needs a, b, n >= 1");
  if (k < 0 || k > std::min(a, b) * n) throw DomainError("expected_mk_biregular needs 0 <= k <= min(an, bn)");
  BigInt num = binomial(std::int64_t(a) * n, k) * binomial(std::int64_t(b) * n, k) *
               boost::multiprecision::pow(BigInt(a) * b, k);
  return Rational(num, binomial(std::int64_t(a) * b * n, k));
}

CycleExpectation expected_cycles_biregular(int a, int b, int n, int j) {
  if (a < 1 || b < 1 || n < 1) throw DomainError("cycle expectation needs a, b, n >= 1");
  if (j < 1) throw DomainError("cycle expectation needs j >= 1");
  CycleExpectation out;
  out.asymptotic = Rational(boost::multiprecision::pow(BigInt((a - 1) * (b - 1)), j), 2 * j);
  const std::int64_t slots = std::int64_t(a) * b * n;
  const std::int64_t an = std::int64_t(a) * n, bn = std::int64_t(b) * n;
  if (a < 2 || b < 2 || j > an || j > bn || 2 * j > slots) {
    out.exact = 0;
    return out;
  }
  auto pw = [](const BigInt& x, std::int64_t e) -> BigInt { return boost::multiprecision::pow(x, static_cast<unsigned>(e)); };
  const BigInt jf = factorial(j);
  BigInt T = binomial(slots, 2 * j) * binomial(an, j) * binomial(bn, j) * factorial(2 * j - 1) * jf * jf;
  const BigInt rest = factorial(slots - 2 * j);
  Rational S = Rational(rest, pw(factorial(a - 2), j) * pw(factorial(a), bn - j)) *
               Rational(rest, pw(factorial(b - 2), j) * pw(factorial(b), an - j));
  const BigInt all = factorial(slots);
  Rational N = Rational(all, pw(factorial(a), bn)) * Rational(all, pw(factorial(b), an));
  out.exact = Rational(T) * S / N;
  return out;
}

Certificate tightness_upper(int d, int n, int k) {
  if (d < 1 || n < 1) throw DomainError("tightness needs d, n >= 1");
  if (k < 0 || k >= n) throw DomainError("tightness needs 0 <= k < n");
  const Rational expected = expected_mk_regular(d, n, k);
  const Rational factor(BigInt(std::int64_t(d) * n - k), BigInt(std::int64_t(d) * (n - k)));
  const Rational core = p_mu(n, k) * lmc_exponential(d, n, k);
  Certificate c;
  c.claim = "tightness";
  c.rhs_exact = expected;
  c.rhs = HighReal(expected);
  c.lhs = boost::multiprecision::sqrt(HighReal(factor)) * HighReal(core);
  c.exact = true;
  c.pass = expected * expected <= factor * core * core;
  c.note = "upper bound (lhs) against the exact configuration-model expectation (rhs); compared after squaring";
  c.with("d", std::to_string(d)).with("n", std::to_string(n)).with("k", std::to_string(k));
  return c;
}

MomentProbe empirical_moments(const ConfigModelParams& params, int k, int samples,
                              const MatchPolyOptions& options) {
  if (samples < 1) throw DomainError("need at least one sample");
  MomentProbe probe;
  probe.samples = samples;
  probe.k = k;
  probe.exact = params.kind == ConfigModelParams::Kind::regular
                    ? expected_mk_regular(params.d, params.n, k)
                    : expected_mk_biregular(params.a, params.b, params.n, k);
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < samples; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    const auto poly = matching_polynomial(sample(params, rng), options);
    const double m = k <= poly.nu() ? to_double(Rational(poly.m(k))) : 0.0;
    sum += m;
    sum_sq += m * m;
  }
  probe.mean = sum / samples;
  const double second = sum_sq / samples;
  const double variance = samples > 1 ? std::max(0.0, (sum_sq - samples * probe.mean * probe.mean) / (samples - 1)) : 0.0;
  probe.std_error = std::sqrt(variance / samples);
  probe.ratio_to_exact = probe.exact == 0 ? 0.0 : probe.mean / to_double(probe.exact);
  probe.second_moment_ratio = probe.mean == 0 ? 0.0 : second / (probe.mean * probe.mean);
  return probe;
}

}  // namespace matchent
