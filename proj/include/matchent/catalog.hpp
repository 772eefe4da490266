#pragma once

#include "matchent/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace matchent {

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph hypercube(int dim);
Graph heawood_graph();
/// Each edge replaced by a path of length 2; new vertices follow the old ones.
Graph subdivision(const Graph& g);

/// Uniform labelled tree on v vertices (Pruefer sequence).
Graph random_tree(int v, std::uint64_t seed);
/// Simple d-regular bipartite graph on n + n vertices (configuration model,
/// rejecting multigraphs).
Graph random_regular_bipartite_simple(int d, int n, std::uint64_t seed);
/// Bipartite graph with each of the left*right pairs present with probability prob.
Graph random_bipartite(int left, int right, double prob, std::uint64_t seed);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Regular bipartite graphs: C_4..C_16, K_{d,d} (d <= 5), Q_3, Heawood and
/// 20 seeded random simple 3-regular bipartite graphs on at most 14 vertices.
std::vector<NamedGraph> regular_catalog();
/// Biregular bipartite graphs with a > b: stars, K_{2,3}, K_{2,4} and the
/// subdivisions of K_4 and K_{3,3}.
std::vector<NamedGraph> biregular_catalog();

}  // namespace matchent
