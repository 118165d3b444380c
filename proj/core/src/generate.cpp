#include <algorithm>
#include <queue>
#include <set>

#include "entcol/graph.hpp"
#include "entcol/random.hpp"

namespace entcol {

GraphModel parse_graph_model(const std::string& name) {
  if (name == "random" || name == "random-with-max-degree") return GraphModel::RandomMaxDegree;
  if (name == "random-girth") return GraphModel::RandomGirth;
  if (name == "cycle") return GraphModel::Cycle;
  if (name == "path") return GraphModel::Path;
  if (name == "complete") return GraphModel::Complete;
  if (name == "complete-bipartite") return GraphModel::CompleteBipartite;
  throw GraphError("unknown graph model '" + name + "'");
}

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Distance from a to b, giving up beyond `limit`.
std::size_t bounded_distance(const std::vector<std::vector<Vertex>>& adj, Vertex a, Vertex b, std::size_t limit) {
  if (a == b) return 0;
  std::vector<std::size_t> dist(adj.size(), limit + 1);
  std::queue<Vertex> queue;
  dist[a] = 0;
  queue.push(a);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    if (dist[x] >= limit) break;
    for (Vertex y : adj[x]) {
      if (dist[y] <= limit) continue;
      dist[y] = dist[x] + 1;
      if (y == b) return dist[y];
      queue.push(y);
    }
  }
  return limit + 1;
}

EdgeList random_capped(const GeneratorParams& p, std::uint64_t seed, std::size_t min_girth) {
  if (p.n < 2) throw GraphError("random graph needs n >= 2");
  if (p.delta == 0 || p.delta > p.n - 1) throw GraphError("random graph needs 1 <= delta <= n-1");
  const std::size_t cap_edges = p.n * p.delta / 2;
  const std::size_t target = p.edges ? p.edges : cap_edges;
  if (target > cap_edges) throw GraphError("edge target exceeds n*delta/2");

  RankSource rng(seed);
  std::vector<std::size_t> degree(p.n, 0);
  std::vector<std::vector<Vertex>> adj(p.n);
  std::set<std::pair<Vertex, Vertex>> present;
  EdgeList edges;
  // Each rejected sample is a loop, a duplicate, a saturated endpoint or a
  // short cycle; give up after a generous number of them.
  const std::size_t max_attempts = 50 * target + 1000;
  for (std::size_t attempt = 0; attempt < max_attempts && edges.size() < target; ++attempt) {
    auto a = static_cast<Vertex>(rng.below(p.n));
    auto b = static_cast<Vertex>(rng.below(p.n));
    if (a == b || degree[a] >= p.delta || degree[b] >= p.delta) continue;
    if (a > b) std::swap(a, b);
    if (present.count({a, b})) continue;
    if (min_girth > 3 && bounded_distance(adj, a, b, min_girth - 2) <= min_girth - 2) continue;
    present.insert({a, b});
    ++degree[a];
    ++degree[b];
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

Graph generate_graph(GraphModel model, const GeneratorParams& p, std::uint64_t seed) {
  EdgeList edges;
  std::size_t n = p.n;
  switch (model) {
    case GraphModel::RandomMaxDegree:
      edges = random_capped(p, seed, 3);
      break;
    case GraphModel::RandomGirth:
      if (p.min_girth < 3) throw GraphError("min_girth must be >= 3");
      edges = random_capped(p, seed, p.min_girth);
      break;
    case GraphModel::Cycle:
      if (n < 3) throw GraphError("cycle needs n >= 3");
      for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
      break;
    case GraphModel::Path:
      if (n < 1) throw GraphError("path needs n >= 1");
      for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case GraphModel::Complete:
      if (n < 1) throw GraphError("complete graph needs n >= 1");
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case GraphModel::CompleteBipartite:
      if (p.n < 1 || p.n2 < 1) throw GraphError("complete-bipartite needs both sides >= 1");
      n = p.n + p.n2;
      for (Vertex i = 0; i < p.n; ++i)
        for (Vertex j = 0; j < p.n2; ++j) edges.emplace_back(i, static_cast<Vertex>(p.n + j));
      break;
  }
  return Graph(n, edges);
}

}  // namespace entcol
