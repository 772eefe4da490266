#include "matchent/matchpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace matchent {

int default_max_vertices() {
  if (const char* env = std::getenv("MATCHENT_MAX_VERTICES")) {
    try {
      int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::logic_error&) {
    }
  }
  return 30;
}

Rational MatchingPolynomial::p_star() const {
  if (vertex_count == 0) return 0;
  return Rational(2 * nu(), vertex_count);
}

int MatchingMeasure::total_multiplicity() const {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

namespace {

using Coeffs = std::vector<BigInt>;

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void add_into(Coeffs& acc, const Coeffs& x, std::size_t shift, const BigInt& scale) {
  if (acc.size() < x.size() + shift) acc.resize(x.size() + shift, 0);
  for (std::size_t i = 0; i < x.size(); ++i) acc[i + shift] += scale * x[i];
}

struct VertexSet {
  std::vector<std::uint64_t> words;
  bool operator==(const VertexSet&) const = default;
  bool contains(int v) const { return (words[v >> 6] >> (v & 63)) & 1U; }
  void erase(int v) { words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void insert(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : s.words) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

class Eliminator {
 public:
  explicit Eliminator(const Graph& g) : g_(g), neighbours_(g.vertex_count()) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
      std::vector<int> adj;
      for (auto [u, id] : g.incident(v)) adj.push_back(u);
      std::sort(adj.begin(), adj.end());
      for (std::size_t i = 0; i < adj.size();) {
        std::size_t j = i;
        while (j < adj.size() && adj[j] == adj[i]) ++j;
        neighbours_[v].push_back({adj[i], static_cast<int>(j - i)});
        i = j;
      }
    }
    // Breadth-first elimination order from a minimum-degree vertex in each component.
    rank_.assign(n, -1);
    int next = 0;
    for (const auto& comp : g.components()) {
      int start = *std::min_element(comp.begin(), comp.end(), [&](int x, int y) {
        return g.degree(x) < g.degree(y);
      });
      std::vector<int> order{start};
      rank_[start] = next++;
      for (std::size_t i = 0; i < order.size(); ++i)
        for (auto [u, mult] : neighbours_[order[i]])
          if (rank_[u] == -1) {
            rank_[u] = next++;
            order.push_back(u);
          }
    }
  }

  Coeffs solve_all() {
    VertexSet all{std::vector<std::uint64_t>((g_.vertex_count() + 63) / 64, 0)};
    for (int v = 0; v < g_.vertex_count(); ++v) all.insert(v);
    return solve(all);
  }

 private:
  Coeffs solve(const VertexSet& s) {
    Coeffs result{1};
    VertexSet unseen = s;
    const int n = g_.vertex_count();
    for (int root = 0; root < n; ++root) {
      if (!unseen.contains(root)) continue;
      VertexSet comp{std::vector<std::uint64_t>(s.words.size(), 0)};
      std::vector<int> stack{root};
      unseen.erase(root);
      comp.insert(root);
      int size = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto [u, mult] : neighbours_[x])
          if (unseen.contains(u)) {
            unseen.erase(u);
            comp.insert(u);
            stack.push_back(u);
            ++size;
          }
      }
      if (size == 1) continue;
      result = multiply(result, solve_component(comp));
    }
    return result;
  }

  const Coeffs& solve_component(const VertexSet& comp) {
    if (auto it = memo_.find(comp); it != memo_.end()) return it->second;
    int pivot = -1;
    for (int v = 0; v < g_.vertex_count(); ++v)
      if (comp.contains(v) && (pivot == -1 || rank_[v] < rank_[pivot])) pivot = v;

    VertexSet rest = comp;
    rest.erase(pivot);
    Coeffs total = solve(rest);
    for (auto [u, mult] : neighbours_[pivot]) {
      if (!rest.contains(u)) continue;
      VertexSet smaller = rest;
      smaller.erase(u);
      add_into(total, solve(smaller), 1, BigInt(mult));
    }
    return memo_.emplace(comp, std::move(total)).first->second;
  }

  const Graph& g_;
  std::vector<std::vector<std::pair<int, int>>> neighbours_;  // (neighbour, multiplicity)
  std::vector<int> rank_;
  std::unordered_map<VertexSet, Coeffs, VertexSetHash> memo_;
};

// Dense polynomials over Q, index = power.
using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly derivative(const RPoly& p) {
  RPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

std::pair<RPoly, RPoly> divmod(RPoly num, const RPoly& den) {
  if (den.empty()) throw std::logic_error("polynomial division by zero");
  trim(num);
  if (num.size() < den.size()) return {RPoly{}, num};
  RPoly q(num.size() - den.size() + 1, 0);
  const Rational& lead = den.back();
  for (std::size_t i = num.size(); i-- >= den.size();) {
    Rational factor = num[i] / lead;
    if (factor == 0) continue;
    std::size_t shift = i - (den.size() - 1);
    q[shift] = factor;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= factor * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  trim(q);
  return {q, num};
}

RPoly make_monic(RPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RPoly gcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

RPoly subtract(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

int sign_at(const RPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

// Yun's square-free factorisation: returns (factor, multiplicity) pairs.
std::vector<std::pair<RPoly, int>> squarefree_decomposition(const RPoly& f) {
  std::vector<std::pair<RPoly, int>> out;
  RPoly fp = derivative(f);
  RPoly a0 = gcd(f, fp);
  RPoly b = divmod(f, a0).first;
  RPoly c = divmod(fp, a0).first;
  RPoly d = subtract(c, derivative(b));
  for (int i = 1; b.size() > 1; ++i) {
    RPoly a = gcd(b, d);
    if (a.size() > 1) out.push_back({a, i});
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = subtract(c, derivative(b));
  }
  return out;
}

class SturmSequence {
 public:
  explicit SturmSequence(const RPoly& f) {
    chain_.push_back(f);
    chain_.push_back(derivative(f));
    while (chain_.back().size() > 1) {
      RPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      chain_.push_back(std::move(r));
    }
  }

  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& p : chain_) {
      int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Number of distinct roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

 private:
  std::vector<RPoly> chain_;
};

double sqrt_of(const Rational& y) {
  HighReal value(boost::multiprecision::numerator(y));
  value /= HighReal(boost::multiprecision::denominator(y));
  return static_cast<double>(boost::multiprecision::sqrt(value));
}

// Isolates every root of square-free `f` in (lo, hi] and refines each
// bracket until its image under sqrt is narrower than tol.
void isolate(const SturmSequence& sturm, Rational lo, Rational hi, int expected, double tol,
             std::vector<double>& out) {
  if (expected == 0) return;
  if (expected > 1) {
    Rational mid = (lo + hi) / 2;
    int left = sturm.count(lo, mid);
    isolate(sturm, lo, mid, left, tol, out);
    isolate(sturm, mid, hi, expected - left, tol, out);
    return;
  }
  for (int iter = 0; iter < 400; ++iter) {
    if (sqrt_of(hi) - sqrt_of(lo) <= tol) break;
    Rational mid = (lo + hi) / 2;
    if (sturm.count(lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  out.push_back(sqrt_of((lo + hi) / 2));
}

}  // namespace

MatchingPolynomial matching_polynomial(const Graph& g, const MatchPolyOptions& options) {
  if (g.vertex_count() > options.max_vertices)
    throw TooLargeError("graph has " + std::to_string(g.vertex_count()) +
                        " vertices; exact matching polynomial limited to " +
                        std::to_string(options.max_vertices) +
                        " (raise MATCHENT_MAX_VERTICES to override)");
  MatchingPolynomial p;
  p.vertex_count = g.vertex_count();
  p.coefficients = Eliminator(g).solve_all();
  while (p.coefficients.size() > 1 && p.coefficients.back() == 0) p.coefficients.pop_back();
  return p;
}

MatchingPolynomial convolve(const MatchingPolynomial& a, const MatchingPolynomial& b) {
  return {multiply(a.coefficients, b.coefficients), a.vertex_count + b.vertex_count};
}

double evaluate_M(const MatchingPolynomial& p, double t) {
  if (!(t >= 0)) throw DomainError("activity t must be non-negative");
  return to_double(evaluate_M(p, from_double(t)));
}

Rational evaluate_M(const MatchingPolynomial& p, const Rational& t) {
  if (t < 0) throw DomainError("activity t must be non-negative");
  Rational acc = 0;
  for (std::size_t k = p.coefficients.size(); k-- > 0;) acc = acc * t + p.coefficients[k];
  return acc;
}

Rational evaluate_tdM(const MatchingPolynomial& p, const Rational& t) {
  if (t < 0) throw DomainError("activity t must be non-negative");
  Rational acc = 0;
  for (std::size_t k = p.coefficients.size(); k-- > 0;)
    acc = acc * t + p.coefficients[k] * static_cast<long>(k);
  return acc;
}

std::vector<BigInt> mu_coefficients(const MatchingPolynomial& p) {
  std::vector<BigInt> mu(p.vertex_count + 1, 0);
  for (int k = 0; k <= p.nu(); ++k) {
    BigInt c = p.coefficients[k];
    mu[p.vertex_count - 2 * k] = (k % 2 == 0) ? c : BigInt(-c);
  }
  return mu;
}

MatchingMeasure matching_measure(const MatchingPolynomial& p, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  MatchingMeasure measure;
  measure.vertex_count = p.vertex_count;
  const int nu = p.nu();
  const int zero_mult = p.vertex_count - 2 * nu;

  // Nonzero roots are +-sqrt(y) for the roots y > 0 of
  //   q(y) = sum_k (-1)^k m_k y^(nu - k).
  RPoly q(nu + 1);
  for (int k = 0; k <= nu; ++k) q[nu - k] = (k % 2 == 0) ? Rational(p.m(k)) : Rational(-p.m(k));

  std::vector<RootMultiplicity> positive;
  if (nu > 0) {
    for (const auto& [factor, mult] : squarefree_decomposition(q)) {
      // Cauchy bound on the positive roots, rounded up to a power of two.
      RPoly monic = make_monic(factor);
      Rational bound = 1;
      for (std::size_t i = 0; i + 1 < monic.size(); ++i)
        bound = std::max(bound, Rational(boost::multiprecision::abs(monic[i])) + 1);
      Rational hi = 1;
      while (hi < bound) hi *= 2;
      SturmSequence sturm(factor);
      const int expected = static_cast<int>(factor.size()) - 1;
      if (sturm.count(0, hi) != expected)
        throw std::logic_error("matching polynomial has non-real or non-positive roots in y = x^2");
      std::vector<double> found;
      isolate(sturm, 0, hi, expected, tol, found);
      for (double r : found) positive.push_back({r, mult});
    }
  }
  for (const auto& r : positive) measure.roots.push_back({-r.value, r.multiplicity});
  if (zero_mult > 0) measure.roots.push_back({0.0, zero_mult});
  for (const auto& r : positive) measure.roots.push_back(r);
  std::sort(measure.roots.begin(), measure.roots.end(),
            [](const auto& x, const auto& y) { return x.value < y.value; });

  if (measure.total_multiplicity() != p.vertex_count)
    throw std::logic_error("root multiplicities do not add up to v(G)");

  // Reconstruction check against mu, scaled by prod (x + |r|).
  std::vector<double> rebuilt{1.0}, scale{1.0};
  for (const auto& r : measure.roots)
    for (int i = 0; i < r.multiplicity; ++i) {
      rebuilt.push_back(0.0);
      scale.push_back(0.0);
      for (std::size_t j = rebuilt.size() - 1; j > 0; --j) {
        rebuilt[j] = rebuilt[j - 1] - r.value * rebuilt[j];
        scale[j] = scale[j - 1] + std::abs(r.value) * scale[j];
      }
      rebuilt[0] *= -r.value;
      scale[0] *= std::abs(r.value);
    }
  const auto mu = mu_coefficients(p);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    double exact = static_cast<double>(mu[i]);
    if (std::abs(rebuilt[i] - exact) > 1e-6 * std::max(1.0, scale[i]))
      throw std::logic_error("reconstructed polynomial differs from mu at x^" + std::to_string(i));
  }
  return measure;
}

std::vector<BigInt> power_sums(const MatchingPolynomial& p, int max_k) {
  if (max_k < 1) throw DomainError("max_k must be at least 1");
  // Elementary symmetric functions of the zeros: e_{2k} = (-1)^k m_k.
  auto e = [&](int j) -> BigInt {
    if (j % 2 != 0 || j / 2 > p.nu()) return 0;
    return (j / 2) % 2 == 0 ? p.m(j / 2) : BigInt(-p.m(j / 2));
  };
  std::vector<BigInt> sums(max_k + 1, 0);
  for (int k = 1; k <= max_k; ++k) {
    BigInt acc = 0;
    for (int i = 1; i < k; ++i) acc += (i % 2 == 1 ? 1 : -1) * e(i) * sums[k - i];
    acc += ((k - 1) % 2 == 0 ? 1 : -1) * k * e(k);
    sums[k] = acc;
  }
  sums.erase(sums.begin());
  return sums;
}

double matching_energy(const MatchingMeasure& m) {
  double total = 0;
  for (const auto& r : m.roots) total += r.multiplicity * std::abs(r.value);
  return total;
}

std::vector<BigInt> characteristic_polynomial(const Graph& g) {
  const int n = g.vertex_count();
  using Matrix = std::vector<std::vector<BigInt>>;
  Matrix adj(n, std::vector<BigInt>(n, 0));
  for (const Edge& e : g.edges()) {
    adj[e.u][e.v] += 1;
    adj[e.v][e.u] += 1;
  }
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n, std::vector<BigInt>(n, 0));  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    Matrix next(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt acc = 0;
        for (int l = 0; l < n; ++l)
          if (adj[i][l] != 0) acc += adj[i][l] * m[l][j];
        next[i][j] = acc;
      }
      next[i][i] += c[n - k + 1];
    }
    BigInt trace = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (adj[i][l] != 0) trace += adj[i][l] * next[l][i];
    c[n - k] = -trace / k;
    m = std::move(next);
  }
  return c;
}

bool is_tree_spectral_match(const Graph& g) {
  if (!g.is_forest()) throw DomainError("spectral/matching coincidence check needs a forest");
  return characteristic_polynomial(g) == mu_coefficients(matching_polynomial(g));
}

}  // namespace matchent
