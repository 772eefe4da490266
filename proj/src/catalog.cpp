#include "matchent/catalog.hpp"

#include "matchent/numeric.hpp"
#include "matchent/randmodels.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace matchent {

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("a simple cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, std::move(edges));
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph hypercube(int dim) {
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < dim; ++bit)
      if (int u = v ^ (1 << bit); u > v) edges.push_back({v, u});
  return Graph(n, std::move(edges));
}

Graph heawood_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 14; ++i) edges.push_back({i, (i + 1) % 14});
  for (int i = 0; i < 14; i += 2) edges.push_back({i, (i + 5) % 14});
  return Graph(14, std::move(edges));
}

Graph subdivision(const Graph& g) {
  std::vector<Edge> edges;
  int next = g.vertex_count();
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, next});
    edges.push_back({next, e.v});
    ++next;
  }
  return Graph(next, std::move(edges));
}

Graph random_tree(int v, std::uint64_t seed) {
  if (v < 1) throw DomainError("a tree needs at least one vertex");
  if (v == 1) return Graph(1, {});
  if (v == 2) return Graph(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, v - 1);
  std::vector<int> code(v - 2);
  for (int& x : code) x = pick(rng);
  std::vector<int> degree(v, 1);
  for (int x : code) ++degree[x];
  std::set<int> leaves;
  for (int i = 0; i < v; ++i)
    if (degree[i] == 1) leaves.insert(i);
  std::vector<Edge> edges;
  for (int x : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, x});
    if (--degree[x] == 1) leaves.insert(x);
  }
  const int u = *leaves.begin(), w = *std::next(leaves.begin());
  edges.push_back({u, w});
  return Graph(v, std::move(edges));
}

Graph random_regular_bipartite_simple(int d, int n, std::uint64_t seed) {
  if (d > n) throw DomainError("no simple d-regular bipartite graph with d > n");
  std::mt19937_64 rng(seed);
  const auto params = ConfigModelParams::regular(d, n, seed);
  for (;;) {
    Graph g = sample(params, rng);
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (const Edge& e : g.edges()) simple = simple && seen.insert({e.u, e.v}).second;
    if (simple) return g;
  }
}

Graph random_bipartite(int left, int right, double prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(prob);
  std::vector<Edge> edges;
  for (int i = 0; i < left; ++i)
    for (int j = 0; j < right; ++j)
      if (coin(rng)) edges.push_back({i, left + j});
  return Graph(left + right, std::move(edges));
}

std::vector<NamedGraph> regular_catalog() {
  std::vector<NamedGraph> out;
  for (int n = 2; n <= 8; ++n) out.push_back({"C" + std::to_string(2 * n), cycle_graph(2 * n)});
  for (int d = 1; d <= 5; ++d) out.push_back({"K" + std::to_string(d) + "," + std::to_string(d), complete_bipartite(d, d)});
  out.push_back({"Q3", hypercube(3)});
  out.push_back({"Heawood", heawood_graph()});
  for (int i = 0; i < 20; ++i) {
    const int n = 3 + i % 5;
    out.push_back({"R3-" + std::to_string(2 * n) + "-s" + std::to_string(i + 1),
                   random_regular_bipartite_simple(3, n, 1000 + i)});
  }
  return out;
}

std::vector<NamedGraph> biregular_catalog() {
  return {
      {"K1,2", star_graph(2)},
      {"K1,3", star_graph(3)},
      {"K2,3", complete_bipartite(2, 3)},
      {"K2,4", complete_bipartite(2, 4)},
      {"K3,4", complete_bipartite(3, 4)},
      {"S(K4)", subdivision(complete_graph(4))},
      {"S(K3,3)", subdivision(complete_bipartite(3, 3))},
  };
}

}  // namespace matchent
