#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "entcol/graph.hpp"
#include "entcol/record_codec.hpp"

namespace entcol {

/// Colors are 1..K; 0 marks an uncolored edge or vertex.
using Color = std::uint32_t;
inline constexpr Color kNoColor = 0;

/// Ranks F_i in {1..rank_bound}, one consumed per step.
using InputVector = std::vector<std::uint32_t>;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Record and coloring that no run could have produced.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Either an explicit input vector or a seed for RankSource.
using RankInput = std::variant<InputVector, std::uint64_t>;

struct RunConfig {
  Color colors = 0;                ///< K
  std::uint32_t rank_bound = 0;    ///< alphabet of F; K - 2(Δ-1) at most
  std::uint64_t max_steps = 0;     ///< 0 selects default_max_steps
  RankInput source = std::uint64_t{0};
};

/// 4 * ceil((m ln(32Δ) + 1) / ln(1 + 1/(2Δ))), with Δ clamped to >= 2, and
/// never below m.
std::uint64_t default_max_steps(std::size_t m, std::size_t delta);

/// Largest admissible rank bound for K colors: K - 2(Δ-1) (or K when Δ <= 1).
std::int64_t rank_capacity(Color colors, std::size_t delta);

/// Throws ConfigError unless K - 2(Δ-1) >= rank_bound >= 1, max_steps >= m
/// (when set) and explicit ranks lie in 1..rank_bound.
void validate(const RunConfig& config, const Graph& g);

/// Mutable edge coloring that keeps, for every vertex, the incident edge
/// holding each color, plus the ordered set X of uncolored edges.
class EdgeColoring {
 public:
  EdgeColoring(const Graph& g, Color colors);

  /// Starts from a complete or partial coloring (0 = uncolored). Colors must
  /// be proper; throws DecodeError otherwise.
  EdgeColoring(const Graph& g, Color colors, std::span<const Color> initial);

  const Graph& graph() const noexcept { return *graph_; }
  Color num_colors() const noexcept { return colors_; }

  Color color(EdgeIndex e) const { return color_[e]; }
  std::span<const Color> colors() const noexcept { return color_; }

  /// Edge at v holding color c, if any.
  std::optional<EdgeIndex> edge_with_color(Vertex v, Color c) const {
    const auto e = at_[static_cast<std::size_t>(v) * (colors_ + 1) + c];
    if (e == kNone) return std::nullopt;
    return e;
  }

  /// Requires e uncolored and c free at both endpoints.
  void assign(EdgeIndex e, Color c);
  void clear(EdgeIndex e);

  const std::set<EdgeIndex>& uncolored() const noexcept { return uncolored_; }
  bool complete() const noexcept { return uncolored_.empty(); }

 private:
  static constexpr EdgeIndex kNone = static_cast<EdgeIndex>(-1);

  const Graph* graph_;
  Color colors_;
  std::vector<Color> color_;
  std::vector<EdgeIndex> at_;
  std::set<EdgeIndex> uncolored_;
};

/// Closed walk u_1 u_2 ... u_2k u_1. edges[i] joins vertices[i] and
/// vertices[(i+1) % size]; edges[0] is the edge the step colored.
struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;

  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Colors of {1..K} that uncolored edge e may take, ascending. A color is
/// excluded if it sits on an edge sharing an endpoint with e = uv, or on an
/// edge xy for which ux and vy carry a common color.
std::vector<Color> available_colors(const EdgeColoring& phi, EdgeIndex e);

/// Distinct excluded colors for e, ascending (the complement of the above).
std::vector<Color> excluded_colors(const EdgeColoring& phi, EdgeIndex e);

/// e = uv was just colored. For every partner color in ascending order, walks
/// the alternating path leaving u and reports the first one that returns to
/// v. The result is oriented so that edges[1] < edges.back(). O(nΔ).
std::optional<Cycle> find_bicolored_cycle(const EdgeColoring& phi, EdgeIndex e);

/// Puts a cycle through e into the orientation used for uncoloring: edges[0]
/// = e and edges[1] < edges.back().
Cycle orient_cycle(const Graph& g, Cycle c);

/// Index of a cycle of length 2k >= 6 through its first edge. The walk starts
/// at the larger endpoint of that edge (coming from the smaller one) and
/// records, for the next 2k-2 moves, the rank of the next vertex among the
/// current vertex's neighbors with the previous vertex skipped.
CycleConflict encode_cycle(const Graph& g, const Cycle& cycle);

/// Inverse of encode_cycle, returning the cycle in uncoloring orientation.
/// Throws DecodeError if the walk leaves the graph or does not close into a
/// simple cycle of length 2k.
Cycle decode_cycle(const Graph& g, EdgeIndex e, std::uint32_t k, const BigInt& ell);

struct StepResult {
  EdgeIndex edge = 0;       ///< edge colored at this step
  Color color = kNoColor;   ///< color it received
  RecordEntry entry;
  std::optional<Cycle> cycle;  ///< the 2-colored cycle, on conflict
};

/// One step: colors the smallest uncolored edge with the rank-th available
/// color, then uncolors all of a 2-colored cycle except edges[1] and edges[2].
/// Requires a nonempty uncolored set and rank <= |available colors|.
StepResult step(EdgeColoring& phi, std::uint32_t rank);

struct StepTrace {
  EdgeIndex edge;
  Color color;
  std::uint32_t rank;
  std::uint32_t uncolored;  ///< edges uncolored by this step (0 if none)
  std::size_t colored_after;
};

struct RunOutcome {
  std::uint64_t steps = 0;
  bool completed = false;
  std::vector<Color> coloring;
  Record record;
  InputVector ranks;             ///< ranks actually consumed
  std::vector<StepTrace> trace;  ///< filled when requested
};

/// Iterates step until every edge is colored, the budget runs out, or an
/// explicit input vector is exhausted. Deterministic in (g, config).
RunOutcome run(const Graph& g, const RunConfig& config, bool keep_trace = false);

/// Recovers the ranks from the record and final coloring alone. Throws
/// DecodeError when the pair is inconsistent.
InputVector reconstruct_inputs(const Graph& g, Color colors, const Record& record, std::span<const Color> final_coloring);

// -- Verification ------------------------------------------------------------

struct UncoloredEdge {
  EdgeIndex edge;
};
struct ClashingEdges {
  EdgeIndex first;
  EdgeIndex second;
};
struct TwoColoredCycle {
  Cycle cycle;
};

struct AcyclicVerdict {
  std::variant<std::monostate, UncoloredEdge, ClashingEdges, TwoColoredCycle> witness;
  bool accepted() const noexcept { return std::holds_alternative<std::monostate>(witness); }
  std::string describe() const;
};

/// Accepts iff every edge is colored, the coloring is proper, and each
/// union of two color classes is a forest.
AcyclicVerdict verify_acyclic(const Graph& g, std::span<const Color> coloring);

/// Same checks restricted to colored edges (for partial colorings).
AcyclicVerdict verify_partial_acyclic(const Graph& g, std::span<const Color> coloring);

}  // namespace entcol
