#include "entcol/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace entcol {

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : adjacency_(n) {
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    const std::string name = "edge e_" + std::to_string(i + 1) + " {" + std::to_string(a) + "," +
                             std::to_string(b) + "}";
    if (a >= n || b >= n) throw GraphError(name + " has an endpoint outside 0.." + std::to_string(n) + "-1");
    if (a == b) throw GraphError(name + " is a loop");
    if (a > b) std::swap(a, b);
    const auto e = static_cast<EdgeIndex>(i);
    edges_.push_back({a, b});
    adjacency_[a].push_back({b, e});
    adjacency_[b].push_back({a, e});
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end(), [](const Neighbor& x, const Neighbor& y) { return x.vertex < y.vertex; });
    for (std::size_t i = 1; i < adj.size(); ++i) {
      if (adj[i].vertex == adj[i - 1].vertex) {
        const auto first = std::min(adj[i].edge, adj[i - 1].edge);
        const auto second = std::max(adj[i].edge, adj[i - 1].edge);
        throw GraphError("edge e_" + std::to_string(second + 1) + " duplicates e_" + std::to_string(first + 1) +
                         " {" + std::to_string(v) + "," + std::to_string(adj[i].vertex) + "}");
      }
    }
    max_degree_ = std::max(max_degree_, adj.size());
  }
}

std::optional<std::size_t> Graph::neighbor_rank(Vertex from, Vertex to) const {
  const auto& adj = adjacency_[from];
  auto it = std::lower_bound(adj.begin(), adj.end(), to,
                             [](const Neighbor& x, Vertex w) { return x.vertex < w; });
  if (it == adj.end() || it->vertex != to) return std::nullopt;
  return static_cast<std::size_t>(it - adj.begin());
}

std::optional<EdgeIndex> Graph::find_edge(Vertex a, Vertex b) const {
  if (a >= num_vertices() || b >= num_vertices()) return std::nullopt;
  if (adjacency_[a].size() > adjacency_[b].size()) std::swap(a, b);
  const auto r = neighbor_rank(a, b);
  if (!r) return std::nullopt;
  return adjacency_[a][*r].edge;
}

GraphStats compute_stats(const Graph& g) {
  GraphStats stats;
  stats.delta = g.max_degree();
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = kUnseen;
  std::vector<std::size_t> dist(n);
  std::vector<EdgeIndex> via(n);
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      // Any cycle found from here is at least 2*dist[x]+1 long.
      if (2 * dist[x] + 1 >= best) continue;
      for (const Neighbor& nb : g.neighbors(x)) {
        if (dist[x] > 0 && nb.edge == via[x]) continue;
        if (dist[nb.vertex] == kUnseen) {
          dist[nb.vertex] = dist[x] + 1;
          via[nb.vertex] = nb.edge;
          queue.push(nb.vertex);
        } else {
          best = std::min(best, dist[x] + dist[nb.vertex] + 1);
        }
      }
    }
  }
  if (best != kUnseen) stats.girth = best;
  return stats;
}

// -- I/O ---------------------------------------------------------------------

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "edge-list" || name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs" || name == "col") return GraphFormat::Dimacs;
  throw GraphError("unknown graph format '" + name + "' (expected edge-list or dimacs)");
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  return value;
}

Vertex to_vertex(std::uint64_t x, std::size_t line) {
  if (x >= std::numeric_limits<Vertex>::max()) throw ParseError(line, "vertex id too large");
  return static_cast<Vertex>(x);
}

// Builds the graph, translating structural errors into line-numbered parse errors.
Graph build(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, const std::vector<std::size_t>& lines) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a == b) throw ParseError(lines[i], "loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      throw ParseError(lines[i], "duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  return Graph(n, edges);
}

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::size_t> lines;
  std::size_t declared_n = 0;
  std::size_t n = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].front() == '#') {
      if (toks.size() >= 2 && toks[0] == "#" && toks[1].starts_with("n=")) {
        declared_n = parse_uint(toks[1].substr(2), lineno);
      }
      continue;
    }
    if (toks.size() != 2) throw ParseError(lineno, "expected two vertex ids");
    const Vertex a = to_vertex(parse_uint(toks[0], lineno), lineno);
    const Vertex b = to_vertex(parse_uint(toks[1], lineno), lineno);
    edges.emplace_back(a, b);
    lines.push_back(lineno);
    n = std::max<std::size_t>(n, std::max(a, b) + 1);
  }
  return build(std::max(n, declared_n), edges, lines);
}

Graph load_dimacs(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::size_t> lines;
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n) throw ParseError(lineno, "second 'p' line");
      if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      n = parse_uint(toks[2], lineno);
      declared_m = parse_uint(toks[3], lineno);
      continue;
    }
    if (toks[0] == "e") {
      if (!n) throw ParseError(lineno, "'e' line before 'p' header");
      if (toks.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
      const auto a = parse_uint(toks[1], lineno);
      const auto b = parse_uint(toks[2], lineno);
      if (a < 1 || b < 1 || a > *n || b > *n)
        throw ParseError(lineno, "vertex out of range 1.." + std::to_string(*n));
      edges.emplace_back(to_vertex(a - 1, lineno), to_vertex(b - 1, lineno));
      lines.push_back(lineno);
      continue;
    }
    throw ParseError(lineno, "unrecognized line '" + line + "'");
  }
  if (!n) throw ParseError(0, "missing 'p edge' header");
  if (edges.size() != declared_m)
    throw ParseError(0, "header declares " + std::to_string(declared_m) + " edges, found " + std::to_string(edges.size()));
  // Validate before reordering so errors point at the offending line.
  build(*n, edges, lines);
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  return Graph(*n, edges);
}

}  // namespace

Graph load_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::EdgeList ? load_edge_list(in) : load_dimacs(in);
}

Graph load_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  return load_graph(in, format);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

}  // namespace entcol
