#pragma once

// Brute-force oracles and small-graph generators shared by the test suites.
// Everything here is deliberately naive: exhaustive enumeration, no reuse of
// library internals beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "entcol/acyclic.hpp"
#include "entcol/graph.hpp"
#include "entcol/random.hpp"

namespace oracle {

using entcol::Color;
using entcol::EdgeIndex;
using entcol::Graph;
using entcol::Vertex;

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, e);
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, e);
}

// G(n, p) with p = num/den, edges listed in lexicographic order.
inline Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, entcol::RankSource& rng) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.below(den) < num) e.push_back({i, j});
  return Graph(n, e);
}

// Random proper partial edge coloring: each edge is skipped with probability
// 1/4, otherwise offered one random color and kept if that is proper.
inline std::vector<Color> random_partial_edge_coloring(const Graph& g, Color colors, entcol::RankSource& rng) {
  std::vector<Color> c(g.num_edges(), 0);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    if (rng.below(4) == 0) continue;
    const Color pick = rng.rank(colors);
    bool ok = true;
    for (Vertex x : {g.edge(e).u, g.edge(e).v})
      for (const auto& nb : g.neighbors(x))
        if (nb.edge != e && c[nb.edge] == pick) ok = false;
    if (ok) c[e] = pick;
  }
  return c;
}

struct SimpleCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;
};

// Every simple cycle once: the walk starts at its smallest vertex and its
// second vertex is smaller than its last.
inline std::vector<SimpleCycle> all_cycles(const Graph& g, std::size_t max_len = 64) {
  std::vector<SimpleCycle> out;
  std::vector<Vertex> path;
  std::vector<EdgeIndex> edges;
  std::vector<char> used(g.num_vertices(), 0);
  auto dfs = [&](auto&& self, Vertex s, Vertex cur) -> void {
    for (const auto& nb : g.neighbors(cur)) {
      if (nb.vertex == s && path.size() >= 3 && path[1] < path.back()) {
        edges.push_back(nb.edge);
        out.push_back({path, edges});
        edges.pop_back();
      }
      if (nb.vertex <= s || used[nb.vertex] || path.size() >= max_len) continue;
      used[nb.vertex] = 1;
      path.push_back(nb.vertex);
      edges.push_back(nb.edge);
      self(self, s, nb.vertex);
      path.pop_back();
      edges.pop_back();
      used[nb.vertex] = 0;
    }
  };
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    path = {s};
    edges.clear();
    used[s] = 1;
    dfs(dfs, s, s);
    used[s] = 0;
  }
  return out;
}

inline std::optional<std::size_t> brute_girth(const Graph& g) {
  std::optional<std::size_t> best;
  for (const auto& c : all_cycles(g))
    if (!best || c.edges.size() < *best) best = c.edges.size();
  return best;
}

inline std::set<Color> cycle_colors(const SimpleCycle& c, const std::vector<Color>& coloring) {
  std::set<Color> s;
  for (auto e : c.edges) s.insert(coloring[e]);
  return s;
}

inline bool is_proper_edge_coloring(const Graph& g, const std::vector<Color>& c, bool total) {
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    if (c[e] == 0) {
      if (total) return false;
      continue;
    }
    for (Vertex x : {g.edge(e).u, g.edge(e).v})
      for (const auto& nb : g.neighbors(x))
        if (nb.edge != e && c[nb.edge] == c[e]) return false;
  }
  return true;
}

// Proper, total, and every cycle sees at least three colors.
inline bool brute_acyclic(const Graph& g, const std::vector<Color>& c) {
  if (!is_proper_edge_coloring(g, c, true)) return false;
  for (const auto& cyc : all_cycles(g))
    if (cycle_colors(cyc, c).size() < 3) return false;
  return true;
}

// Colors forbidden for uncolored e = uv, straight from the two rules.
inline std::set<Color> brute_excluded(const Graph& g, const std::vector<Color>& c, EdgeIndex e) {
  const Vertex u = g.edge(e).u;
  const Vertex v = g.edge(e).v;
  std::set<Color> out;
  for (EdgeIndex f = 0; f < g.num_edges(); ++f) {
    if (f == e || c[f] == 0) continue;
    const auto& ed = g.edge(f);
    if (ed.u == u || ed.v == u || ed.u == v || ed.v == v) out.insert(c[f]);
  }
  for (Vertex x = 0; x < g.num_vertices(); ++x)
    for (Vertex y = 0; y < g.num_vertices(); ++y) {
      for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        const auto ax = g.find_edge(a, x);
        const auto by = g.find_edge(b, y);
        const auto xy = g.find_edge(x, y);
        if (!ax || !by || !xy || *ax == e || *by == e) continue;
        if (c[*ax] != 0 && c[*ax] == c[*by] && c[*xy] != 0) out.insert(c[*xy]);
      }
    }
  return out;
}

// All simple paths on exactly `count` vertices, each once (front < back).
inline std::vector<std::vector<Vertex>> all_paths(const Graph& g, std::size_t count) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<char> used(g.num_vertices(), 0);
  auto dfs = [&](auto&& self) -> void {
    if (path.size() == count) {
      if (path.front() < path.back() || count == 1) out.push_back(path);
      return;
    }
    for (const auto& nb : g.neighbors(path.back())) {
      if (used[nb.vertex]) continue;
      used[nb.vertex] = 1;
      path.push_back(nb.vertex);
      self(self);
      path.pop_back();
      used[nb.vertex] = 0;
    }
  };
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    path = {s};
    used[s] = 1;
    dfs(dfs);
    used[s] = 0;
  }
  return out;
}

inline bool two_colored(const std::vector<Vertex>& path, const std::vector<Color>& c) {
  std::set<Color> s;
  for (auto v : path) {
    if (c[v] == 0) return false;
    s.insert(c[v]);
  }
  return s.size() <= 2;
}

// Star coloring via its classical characterization: proper, and every pair
// of color classes induces a forest whose components are stars.
inline bool star_forest_check(const Graph& g, const std::vector<Color>& c) {
  for (const auto& e : g.edges())
    if (c[e.u] == 0 || c[e.u] == c[e.v]) return false;
  std::set<Color> palette(c.begin(), c.end());
  for (Color a : palette)
    for (Color b : palette) {
      if (a >= b) continue;
      std::vector<int> comp(g.num_vertices(), -1);
      for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if ((c[s] != a && c[s] != b) || comp[s] >= 0) continue;
        std::vector<Vertex> stack{s}, members;
        comp[s] = static_cast<int>(s);
        while (!stack.empty()) {
          const Vertex x = stack.back();
          stack.pop_back();
          members.push_back(x);
          for (const auto& nb : g.neighbors(x))
            if ((c[nb.vertex] == a || c[nb.vertex] == b) && comp[nb.vertex] < 0) {
              comp[nb.vertex] = static_cast<int>(s);
              stack.push_back(nb.vertex);
            }
        }
        std::size_t edge_count = 0;
        std::size_t centers = 0;
        for (Vertex x : members) {
          std::size_t deg = 0;
          for (const auto& nb : g.neighbors(x))
            if (c[nb.vertex] == a || c[nb.vertex] == b) ++deg;
          edge_count += deg;
          if (deg > 1) ++centers;
        }
        if (edge_count / 2 != members.size() - 1 || centers > 1) return false;
      }
    }
  return true;
}

}  // namespace oracle
