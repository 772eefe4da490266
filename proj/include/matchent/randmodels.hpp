#pragma once

#include "matchent/certificate.hpp"
#include "matchent/graph.hpp"
#include "matchent/matchpoly.hpp"

#include <cstdint>
#include <random>

namespace matchent {

/// Configuration-model parameters. Regular: two classes of n vertices, each
/// with d slots. Biregular: bn vertices of degree a (class A, vertices
/// 0..bn-1) and an vertices of degree b (class B); abn slots per side.
struct ConfigModelParams {
  enum class Kind { regular, biregular };
  Kind kind = Kind::regular;
  int d = 0, a = 0, b = 0, n = 0;
  std::uint64_t seed = 0;

  static ConfigModelParams regular(int d, int n, std::uint64_t seed = 0);
  static ConfigModelParams biregular(int a, int b, int n, std::uint64_t seed = 0);

  int vertex_count() const;
  int slot_count() const;
};

/// Uniform random pairing of slots (Fisher-Yates); multi-edges are kept.
Graph sample(const ConfigModelParams& params);
Graph sample(const ConfigModelParams& params, std::mt19937_64& rng);

/// Graph obtained from a slot permutation: slot i on the left is paired with
/// slot perm[i] on the right.
Graph pairing_graph(const ConfigModelParams& params, const std::vector<int>& perm);

/// C(n,k)^2 d^2k / C(dn,k).
Rational expected_mk_regular(int d, int n, int k);
/// C(an,k) C(bn,k) (ab)^k / C(abn,k).
Rational expected_mk_biregular(int a, int b, int n, int k);

struct CycleExpectation {
  Rational asymptotic;  // ((a-1)(b-1))^j / (2j)
  Rational exact;       // T_j S_j / N at the given n
};
CycleExpectation expected_cycles_biregular(int a, int b, int n, int j);

/// E m_k(regular model) <= sqrt((1-p/d)/(1-p)) p_mu exp(2n G_d(p)), p = k/n,
/// compared exactly after squaring (log space for large n).
Certificate tightness_upper(int d, int n, int k);

struct MomentProbe {
  int samples = 0;
  int k = 0;
  double mean = 0;
  double std_error = 0;
  Rational exact;
  double ratio_to_exact = 0;
  double second_moment_ratio = 0;  // mean(m_k^2) / mean(m_k)^2
};

/// Monte-Carlo moments of m_k; sample i uses a generator seeded from
/// (params.seed, i).
MomentProbe empirical_moments(const ConfigModelParams& params, int k, int samples,
                              const MatchPolyOptions& options = {});

}  // namespace matchent
