#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "entcol/acyclic.hpp"
#include "entcol/graph.hpp"

namespace entcol {

struct StarConfig {
  std::uint32_t k = 2;           ///< forbidden paths have 2k vertices
  std::uint32_t rank_bound = 1;  ///< K; the palette is {1..K+Δ}
  std::uint64_t max_steps = 0;   ///< 0 selects default_max_steps(n, Δ)
  RankInput source = std::uint64_t{0};
};

void validate(const StarConfig& config, const Graph& g);

/// Total palette size K + Δ.
Color star_palette(const StarConfig& config, const Graph& g);

/// A step that closed a 2-colored path on 2k vertices.
///
/// The path is stored in canonical orientation (first endpoint has the smaller
/// id). `position` is the index of the colored vertex on it. The arms leaving
/// that vertex are encoded as neighbor ranks: `anchor` is the 1-based rank of
/// the first arm's first vertex among all neighbors, and `labels` holds the
/// remaining 2k-2 moves as ranks with the previous vertex skipped. The first
/// arm points towards index 0 unless position is 0.
struct PathConflict {
  std::uint32_t position = 0;
  std::uint32_t anchor = 0;
  std::vector<std::uint32_t> labels;

  friend bool operator==(const PathConflict&, const PathConflict&) = default;
};

using StarRecordEntry = std::optional<PathConflict>;
using StarRecord = std::vector<StarRecordEntry>;

struct StarRunOutcome {
  std::uint64_t steps = 0;
  bool completed = false;
  std::vector<Color> coloring;  ///< per vertex, 0 = uncolored
  StarRecord record;
  InputVector ranks;
};

/// The canonical 2-colored path on `path_vertices` vertices through v: the
/// lexicographically smallest vertex sequence, each path read from its
/// smaller endpoint. Uncolored vertices never lie on such a path.
std::optional<std::vector<Vertex>> find_bicolored_path(const Graph& g, std::span<const Color> coloring, Vertex v,
                                                       std::uint32_t path_vertices);

/// Index range [first, first+1] of the two vertices kept colored when the
/// path is uncolored: the consecutive pair at the end farther from `position`.
std::uint32_t retained_pair_start(std::size_t path_vertices, std::uint32_t position);

PathConflict encode_path(const Graph& g, std::span<const Vertex> path, Vertex v);
/// Throws DecodeError for labels that leave the graph or revisit a vertex.
std::vector<Vertex> decode_path(const Graph& g, Vertex v, std::uint32_t k, const PathConflict& entry);

StarRunOutcome run_star(const Graph& g, const StarConfig& config);

InputVector reconstruct_star_inputs(const Graph& g, const StarConfig& config, const StarRecord& record,
                                    std::span<const Color> final_coloring);

struct UncoloredVertex {
  Vertex vertex;
};
struct ClashingVertices {
  Vertex first;
  Vertex second;
};
struct TwoColoredPath {
  std::vector<Vertex> vertices;
};

struct StarVerdict {
  std::variant<std::monostate, UncoloredVertex, ClashingVertices, TwoColoredPath> witness;
  bool accepted() const noexcept { return std::holds_alternative<std::monostate>(witness); }
  std::string describe() const;
};

/// Accepts iff the vertex coloring is total, proper, and no path on 2k
/// vertices carries only two colors. Exhaustive; meant for desk-scale graphs.
StarVerdict verify_star_k(const Graph& g, std::span<const Color> coloring, std::uint32_t k);

}  // namespace entcol
