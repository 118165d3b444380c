#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace entcol {

using Vertex = std::uint32_t;

/// Zero-based position of an edge in the graph's edge order. The edge
/// at index i is e_{i+1} in the one-based naming used in reports.
using EdgeIndex = std::uint32_t;

struct Edge {
  Vertex u;  ///< smaller endpoint
  Vertex v;  ///< larger endpoint

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex;
  EdgeIndex edge;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that could not be parsed. line() is one-based, 0 when unknown.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph with a fixed edge order. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on loops, parallel edges or endpoints >= n. Edge order
  /// is kept as given; endpoints are stored with u < v.
  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Neighbors sorted by vertex id.
  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const;

  /// Endpoint of e that is not x. x must be an endpoint of e.
  Vertex other(EdgeIndex e, Vertex x) const {
    const Edge& ed = edges_[e];
    return ed.u == x ? ed.v : ed.u;
  }

  /// Position of `to` in the sorted neighbor list of `from`, or nullopt.
  std::optional<std::size_t> neighbor_rank(Vertex from, Vertex to) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.num_vertices() == b.num_vertices(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::size_t max_degree_ = 0;
};

struct GraphStats {
  std::size_t delta = 0;
  std::optional<std::size_t> girth;  ///< nullopt for forests
};

/// Maximum degree and exact girth (BFS from every vertex).
GraphStats compute_stats(const Graph& g);

// -- I/O ---------------------------------------------------------------------

enum class GraphFormat { EdgeList, Dimacs };

GraphFormat parse_graph_format(const std::string& name);

/// Edge-list: "u v" per line, '#' comments, blank lines ignored; edge order is
/// input order. A leading "# n=<N>" comment fixes the vertex count.
/// DIMACS: "p edge n m" header and 1-based "e u v" lines; edges are sorted
/// lexicographically.
Graph load_graph(std::istream& in, GraphFormat format);
Graph load_graph_file(const std::string& path, GraphFormat format);

void write_edge_list(std::ostream& out, const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);

// -- Generators --------------------------------------------------------------

enum class GraphModel {
  RandomMaxDegree,  ///< random edges under a degree cap
  RandomGirth,      ///< as above, also refusing edges that close short cycles
  Cycle,
  Path,
  Complete,
  CompleteBipartite,
};

GraphModel parse_graph_model(const std::string& name);

struct GeneratorParams {
  std::size_t n = 0;
  std::size_t n2 = 0;        ///< second side for complete-bipartite
  std::size_t delta = 0;     ///< degree cap for the random models
  std::size_t edges = 0;     ///< target edge count for random models; 0 = n*delta/2
  std::size_t min_girth = 3; ///< RandomGirth only
};

/// Deterministic for a fixed seed. Throws GraphError on infeasible params.
Graph generate_graph(GraphModel model, const GeneratorParams& params, std::uint64_t seed);

}  // namespace entcol
