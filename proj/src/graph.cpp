#include "matchent/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace matchent {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw RangeError("negative vertex count");
  adjacency_.assign(vertex_count_, {});
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_)
      throw RangeError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has an endpoint outside 0.." + std::to_string(vertex_count_ - 1));
    if (e.u == e.v) throw RangeError("loop at vertex " + std::to_string(e.u));
    adjacency_[e.u].push_back({e.v, id});
    adjacency_[e.v].push_back({e.u, id});
  }

  std::vector<int> colour(vertex_count_, -1);
  for (int root = 0; root < vertex_count_; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, id] : adjacency_[x]) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          stack.push_back(y);
        } else if (colour[y] == colour[x]) {
          return;  // odd cycle: no bipartition
        }
      }
    }
  }
  colouring_ = std::move(colour);
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& inc : adjacency_) best = std::max(best, static_cast<int>(inc.size()));
  return best;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> seen(vertex_count_, 0);
  std::vector<std::vector<int>> result;
  for (int root = 0; root < vertex_count_; ++root) {
    if (seen[root]) continue;
    std::vector<int> comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto [y, id] : adjacency_[comp[i]])
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool Graph::is_forest() const {
  return edges_.size() + components().size() == static_cast<std::size_t>(vertex_count_);
}

int DegreeProfile::class_a_size() const {
  return static_cast<int>(std::count(side.begin(), side.end(), 0));
}

Graph load_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::optional<int> declared;
  std::vector<Edge> edges;
  int max_index = -1;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;

    auto to_index = [&](const std::string& tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::logic_error&) {
        throw ParseError(line_no, "expected a vertex index, got '" + tok + "'");
      }
      if (used != tok.size() || value < 0 || value > std::numeric_limits<int>::max())
        throw ParseError(line_no, "expected a vertex index, got '" + tok + "'");
      return static_cast<int>(value);
    };

    if (tokens[0] == "v") {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'v <count>'");
      if (declared || !edges.empty())
        throw ParseError(line_no, "header must appear once, before any edge");
      declared = to_index(tokens[1]);
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected '<u> <w>'");
    Edge e{to_index(tokens[0]), to_index(tokens[1])};
    if (e.u == e.v) throw ParseError(line_no, "loop at vertex " + tokens[0]);
    if (declared && (e.u >= *declared || e.v >= *declared))
      throw RangeError("line " + std::to_string(line_no) + ": vertex index out of range for v " +
                       std::to_string(*declared));
    max_index = std::max({max_index, e.u, e.v});
    edges.push_back(e);
  }
  return Graph(declared.value_or(max_index + 1), std::move(edges));
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_graph(buffer.str());
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile profile;
  const int n = g.vertex_count();
  profile.max_degree = g.max_degree();
  if (n == 0) {
    profile.is_regular = profile.is_biregular = true;
    return profile;
  }
  profile.is_regular = true;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != g.degree(0)) profile.is_regular = false;
  if (profile.is_regular) profile.degree = g.degree(0);

  if (!g.is_bipartite()) return profile;

  // Orient each component so the side with the larger degree is class A.
  std::vector<int> side(n, 0);
  std::optional<std::pair<int, int>> ab;
  const auto& colour = *g.bipartition();
  for (const auto& comp : g.components()) {
    std::optional<int> deg[2];
    for (int v : comp) {
      auto& d = deg[colour[v]];
      if (d && *d != g.degree(v)) return profile;
      d = g.degree(v);
    }
    if (!deg[1]) deg[1] = 0;  // isolated vertex: one empty side
    const bool flip = *deg[1] > *deg[0];
    std::pair<int, int> here{std::max(*deg[0], *deg[1]), std::min(*deg[0], *deg[1])};
    if (comp.size() == 1) here = {0, 0};
    if (ab && *ab != here) return profile;
    ab = here;
    for (int v : comp) side[v] = flip ? 1 - colour[v] : colour[v];
  }
  profile.is_biregular = true;
  profile.a = ab->first;
  profile.b = ab->second;
  profile.side = std::move(side);
  if (profile.is_regular && g.edge_count() > 0) profile.a = profile.b = profile.degree;
  return profile;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent_edge(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent_edge[root] = -1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      if (2 * dist[x] >= best) break;
      for (auto [y, id] : g.incident(x)) {
        if (id == parent_edge[x]) continue;
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent_edge[y] = id;
          queue.push(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::uint64_t count_cycles(const Graph& g, int length) {
  if (length < 2) return 0;
  const int n = g.vertex_count();
  std::uint64_t closed_walks = 0;
  std::vector<char> on_path(n, 0);

  // Rooted at the smallest vertex of the cycle; each cycle is found once per
  // direction.
  std::function<void(int, int, int, int)> extend = [&](int root, int x, int depth, int via) {
    for (auto [y, id] : g.incident(x)) {
      if (id == via) continue;
      if (y == root) {
        if (depth + 1 == length) ++closed_walks;
        continue;
      }
      if (y < root || on_path[y] || depth + 1 >= length) continue;
      on_path[y] = 1;
      extend(root, y, depth + 1, id);
      on_path[y] = 0;
    }
  };
  for (int root = 0; root < n; ++root) {
    on_path[root] = 1;
    extend(root, root, 0, -1);
    on_path[root] = 0;
  }
  return closed_walks / 2;
}

namespace {

int bipartite_matching(const Graph& g) {
  const int n = g.vertex_count();
  const auto& side = *g.bipartition();
  std::vector<int> mate(n, -1);
  std::vector<int> visited(n, -1);
  std::function<bool(int, int)> augment = [&](int x, int stamp) -> bool {
    for (auto [y, id] : g.incident(x)) {
      if (visited[y] == stamp) continue;
      visited[y] = stamp;
      if (mate[y] == -1 || augment(mate[y], stamp)) {
        mate[y] = x;
        mate[x] = y;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int x = 0; x < n; ++x)
    if (side[x] == 0 && mate[x] == -1 && augment(x, x)) ++size;
  return size;
}

// Edmonds' blossom algorithm.
int general_matching(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> mate(n, -1), parent(n), base(n);
  std::vector<char> used(n), blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (mate[a] == -1) break;
      a = parent[mate[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[mate[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  };
  auto find_path = [&](int root) -> int {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (auto [to, id] : g.incident(v)) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
          int current = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, current, to);
          mark_path(to, current, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = current;
              if (!used[i]) {
                used[i] = 1;
                queue.push(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (mate[to] == -1) return to;
          used[mate[to]] = 1;
          queue.push(mate[to]);
        }
      }
    }
    return -1;
  };

  int size = 0;
  for (int root = 0; root < n; ++root) {
    if (mate[root] != -1) continue;
    int v = find_path(root);
    if (v == -1) continue;
    ++size;
    while (v != -1) {
      int pv = parent[v], ppv = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = ppv;
    }
  }
  return size;
}

}  // namespace

int max_matching(const Graph& g) {
  return g.is_bipartite() ? bipartite_matching(g) : general_matching(g);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  const int shift = g.vertex_count();
  for (const Edge& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

}  // namespace matchent
