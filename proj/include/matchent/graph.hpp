#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matchent {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  int neighbor;
  int edge;  // index into Graph::edges()
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Finite undirected multigraph. Loops are rejected, parallel edges are kept.
/// When the graph is bipartite the 2-colouring is computed on construction
/// (each component's lowest vertex gets colour 0).
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Incidence>& incident(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int max_degree() const noexcept;

  bool is_bipartite() const noexcept { return colouring_.has_value(); }
  /// side[v] in {0, 1}; empty optional for non-bipartite graphs.
  const std::optional<std::vector<int>>& bipartition() const noexcept { return colouring_; }

  /// Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<std::vector<int>> components() const;
  bool is_forest() const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::optional<std::vector<int>> colouring_;
};

struct DegreeProfile {
  bool is_regular = false;
  int degree = 0;  // valid when is_regular
  bool is_biregular = false;
  int a = 0;  // degree of class A (the larger degree, smaller class)
  int b = 0;
  std::vector<int> side;  // side[v] == 0 means v is in class A; empty unless biregular
  int max_degree = 0;
  int class_a_size() const;
};

Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
std::string write_edge_list(const Graph& g);

DegreeProfile degree_profile(const Graph& g);

/// Length of the shortest cycle; nullopt for forests. Parallel edges give 2.
std::optional<int> girth(const Graph& g);

/// Number of cycles of exactly `length` edges, each counted once. Parallel
/// edges are distinct, so a doubled edge is one 2-cycle.
std::uint64_t count_cycles(const Graph& g, int length);

/// Size of a maximum matching.
int max_matching(const Graph& g);

Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace matchent
