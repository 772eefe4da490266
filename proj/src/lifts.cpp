#include "matchent/lifts.hpp"

#include "matchent/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace matchent {

Signing random_signing(const Graph& g, std::mt19937_64& rng) {
  Signing s;
  s.signs.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) s.signs.push_back((rng() >> 63) ? -1 : 1);
  return s;
}

Graph apply_lift(const Graph& g, const Signing& s) {
  if (s.signs.size() != g.edge_count())
    throw DomainError("signing has " + std::to_string(s.signs.size()) + " entries for " +
                      std::to_string(g.edge_count()) + " edges");
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (s.signs[i] == 1) {
      edges.push_back({e.u, e.v});
      edges.push_back({e.u + n, e.v + n});
    } else if (s.signs[i] == -1) {
      edges.push_back({e.u, e.v + n});
      edges.push_back({e.u + n, e.v});
    } else {
      throw DomainError("signs must be +1 or -1");
    }
  }
  return Graph(2 * n, std::move(edges));
}

LiftLemmaCheck verify_lift_lemma(const Graph& g, const Signing& s, const MatchPolyOptions& options) {
  if (!g.is_bipartite()) throw DomainError("the lift lemma needs a bipartite base graph");
  const auto base = matching_polynomial(g, options);
  MatchPolyOptions doubled = options;
  doubled.max_vertices = std::max(options.max_vertices, 2 * g.vertex_count());
  const auto two = convolve(base, base);
  const auto lift = matching_polynomial(apply_lift(g, s), doubled);
  LiftLemmaCheck check;
  const int top = std::max(two.nu(), lift.nu());
  for (int k = 0; k <= top; ++k) {
    BigInt left = k <= two.nu() ? two.m(k) : BigInt(0);
    BigInt right = k <= lift.nu() ? lift.m(k) : BigInt(0);
    check.margins.push_back(left - right);
    if (left < right) check.pass = false;
  }
  return check;
}

std::string to_string(Tower::Status s) {
  switch (s) {
    case Tower::Status::complete: return "complete";
    case Tower::Status::stalled: return "stalled";
    case Tower::Status::capped: return "capped";
  }
  return "unknown";
}

namespace {

std::uint64_t level_seed(std::uint64_t seed, int level) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(level)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (std::uint64_t(out[0]) << 32) | out[1];
}

bool improves(const Graph& lift, int k, std::uint64_t current_count) {
  const auto g = girth(lift);
  if (!g || *g > k) return true;
  return count_cycles(lift, k) < current_count;
}

}  // namespace

Tower boost_girth(const Graph& g, std::uint64_t rng_seed, int target_girth, const GirthBoostOptions& options) {
  Tower tower;
  tower.seed = rng_seed;
  tower.target_girth = target_girth;
  tower.levels.push_back({g, {}, girth(g), rng_seed, 0, false});
  for (;;) {
    const TowerLevel& cur = tower.levels.back();
    if (!cur.girth || *cur.girth >= target_girth) {
      tower.status = Tower::Status::complete;
      return tower;
    }
    if (2 * cur.graph.vertex_count() > options.max_vertices) {
      tower.status = Tower::Status::capped;
      return tower;
    }
    const int k = *cur.girth;
    const std::uint64_t count = count_cycles(cur.graph, k);
    const std::uint64_t seed = level_seed(rng_seed, static_cast<int>(tower.levels.size()));
    std::mt19937_64 rng(seed);
    std::optional<TowerLevel> next;
    for (int attempt = 1; attempt <= options.max_attempts && !next; ++attempt) {
      Signing s = random_signing(cur.graph, rng);
      Graph lifted = apply_lift(cur.graph, s);
      if (improves(lifted, k, count)) next = TowerLevel{std::move(lifted), std::move(s), std::nullopt, seed, attempt, false};
    }
    const int edges = static_cast<int>(cur.graph.edge_count());
    if (!next && edges >= 1 && edges <= options.exhaustive_edge_limit) {
      // Edge 0 stays +1.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (edges - 1)) && !next; ++mask) {
        Signing s;
        s.signs.push_back(1);
        for (int i = 1; i < edges; ++i) s.signs.push_back((mask >> (i - 1)) & 1 ? -1 : 1);
        Graph lifted = apply_lift(cur.graph, s);
        if (improves(lifted, k, count))
          next = TowerLevel{std::move(lifted), std::move(s), std::nullopt, seed, options.max_attempts, true};
      }
    }
    if (!next) {
      tower.status = Tower::Status::stalled;
      return tower;
    }
    next->girth = girth(next->graph);
    tower.levels.push_back(std::move(*next));
  }
}

void replay(const Tower& tower) {
  for (std::size_t i = 1; i < tower.levels.size(); ++i) {
    const Graph rebuilt = apply_lift(tower.levels[i - 1].graph, tower.levels[i].signing);
    if (rebuilt.vertex_count() != tower.levels[i].graph.vertex_count() ||
        rebuilt.edges() != tower.levels[i].graph.edges())
      throw std::logic_error("tower level " + std::to_string(i) + " does not match its signing");
    if (girth(rebuilt) != tower.levels[i].girth)
      throw std::logic_error("tower level " + std::to_string(i) + " has the wrong girth");
  }
}

ProbeReport convergence_probe(const Tower& tower, const TreeParams& params, const std::vector<double>& t_grid,
                              const std::vector<double>& p_grid, const MatchPolyOptions& options) {
  if (tower.levels.empty()) throw DomainError("empty tower");
  const auto profile = degree_profile(tower.levels.front().graph);
  if (params.kind == TreeParams::Kind::regular) {
    if (!profile.is_regular || profile.degree != params.d)
      throw DomainError("tower base is not " + std::to_string(params.d) + "-regular");
  } else if (!profile.is_biregular || profile.a != params.a || profile.b != params.b) {
    throw DomainError("tower base does not match " + params.describe());
  }
  ProbeReport report;
  report.t_grid = t_grid;
  report.p_grid = p_grid;
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    const auto& level = tower.levels[i];
    if (level.graph.vertex_count() > options.max_vertices) {
      report.truncated = true;
      break;
    }
    const auto poly = matching_polynomial(level.graph, options);
    ProbeRow row;
    row.level = static_cast<int>(i);
    row.vertex_count = level.graph.vertex_count();
    row.girth = level.girth;
    for (double t : t_grid) row.density_gap.push_back(std::abs(density(poly, t) - density_tree(params, t)));
    const double p_limit = std::min(to_double(poly.p_star()), params.p_max());
    for (double p : p_grid) {
      if (p < 0 || p > p_limit) {
        row.entropy_gap.push_back(std::nan(""));
        continue;
      }
      const double gap = entropy_at(poly, p).lambda - entropy_tree(params, p);
      row.entropy_gap.push_back(gap);
      if (gap < -1e-9) report.entropy_one_sided = false;
    }
    if (!report.rows.empty()) {
      const auto& prev = report.rows.back();
      for (std::size_t j = 0; j < row.density_gap.size(); ++j)
        if (row.density_gap[j] > prev.density_gap[j] + 1e-3) report.density_monotone = false;
      for (std::size_t j = 0; j < row.entropy_gap.size(); ++j)
        if (row.entropy_gap[j] > prev.entropy_gap[j] + 1e-3) report.entropy_monotone = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace matchent
