#pragma once

#include "matchent/graph.hpp"
#include "matchent/matchpoly.hpp"
#include "matchent/treeformulas.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace matchent {

/// One sign per base edge: +1 lifts the edge in parallel, -1 crosses it.
struct Signing {
  std::vector<int> signs;
  friend bool operator==(const Signing&, const Signing&) = default;
};

Signing random_signing(const Graph& g, std::mt19937_64& rng);

/// Vertex (v, layer) becomes v + layer * v(G).
Graph apply_lift(const Graph& g, const Signing& s);

struct LiftLemmaCheck {
  std::vector<BigInt> margins;  // m_k(G u G) - m_k(H), k = 0..
  bool pass = true;
};

/// Throws DomainError for non-bipartite g.
LiftLemmaCheck verify_lift_lemma(const Graph& g, const Signing& s, const MatchPolyOptions& options = {});

struct TowerLevel {
  Graph graph;
  Signing signing;  // produced this level from the previous one; empty at level 0
  std::optional<int> girth;
  std::uint64_t seed = 0;
  int attempts = 0;
  bool exhaustive = false;
};

struct Tower {
  enum class Status { complete, stalled, capped };
  std::vector<TowerLevel> levels;
  Status status = Status::complete;
  std::uint64_t seed = 0;
  int target_girth = 0;

  const Graph& top() const { return levels.back().graph; }
};

std::string to_string(Tower::Status s);

struct GirthBoostOptions {
  int max_attempts = 1000;
  int max_vertices = 1 << 14;
  // Exhaustive search over all signings when a level has at most this many edges.
  int exhaustive_edge_limit = 16;
};

/// Repeated random 2-lifts, accepting a signing whose lift has strictly
/// fewer shortest cycles than the current level (or larger girth).
Tower boost_girth(const Graph& g, std::uint64_t rng_seed, int target_girth, const GirthBoostOptions& options = {});

/// Rebuild each level from its signing; throws std::logic_error on mismatch.
void replay(const Tower& tower);

struct ProbeRow {
  int level = 0;
  int vertex_count = 0;
  std::optional<int> girth;
  std::vector<double> density_gap;  // |p(G_i,t) - p(T,t)| per t
  std::vector<double> entropy_gap;  // lambda_{G_i}(p) - tree entropy(p) per p
};

struct ProbeReport {
  std::vector<double> t_grid, p_grid;
  std::vector<ProbeRow> rows;
  bool density_monotone = true;  // non-increasing in level, 1e-3 slack
  bool entropy_monotone = true;  // non-increasing in level, 1e-3 slack
  bool entropy_one_sided = true;  // all gaps >= -1e-9
  bool truncated = false;  // levels above options.max_vertices were left out
  bool pass() const { return density_monotone && entropy_monotone && entropy_one_sided; }
};

/// Rows stop at the first level larger than options.max_vertices.
ProbeReport convergence_probe(const Tower& tower, const TreeParams& params, const std::vector<double>& t_grid,
                              const std::vector<double>& p_grid, const MatchPolyOptions& options = {});

}  // namespace matchent
