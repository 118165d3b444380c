#include "entcol/acyclic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "entcol/random.hpp"

namespace entcol {

std::uint64_t default_max_steps(std::size_t m, std::size_t delta) {
  const double d = static_cast<double>(std::max<std::size_t>(delta, 2));
  const double expected = (static_cast<double>(m) * std::log(32.0 * d) + 1.0) / std::log1p(1.0 / (2.0 * d));
  return std::max<std::uint64_t>(m, 4 * static_cast<std::uint64_t>(std::ceil(expected)));
}

std::int64_t rank_capacity(Color colors, std::size_t delta) {
  const auto k = static_cast<std::int64_t>(colors);
  if (delta <= 1) return k;
  return k - 2 * (static_cast<std::int64_t>(delta) - 1);
}

void validate(const RunConfig& config, const Graph& g) {
  const std::size_t delta = g.max_degree();
  if (config.rank_bound < 1) throw ConfigError("rank bound must be >= 1");
  if (rank_capacity(config.colors, delta) < static_cast<std::int64_t>(config.rank_bound))
    throw ConfigError("K=" + std::to_string(config.colors) + " leaves " +
                      std::to_string(rank_capacity(config.colors, delta)) + " guaranteed colors for max degree " +
                      std::to_string(delta) + ", need rank bound " + std::to_string(config.rank_bound));
  if (config.max_steps != 0 && config.max_steps < g.num_edges())
    throw ConfigError("max_steps must be at least the number of edges");
  if (const auto* ranks = std::get_if<InputVector>(&config.source)) {
    for (std::size_t i = 0; i < ranks->size(); ++i) {
      const auto r = (*ranks)[i];
      if (r < 1 || r > config.rank_bound)
        throw ConfigError("input rank F_" + std::to_string(i + 1) + "=" + std::to_string(r) + " outside 1.." +
                          std::to_string(config.rank_bound));
    }
  }
}

// -- EdgeColoring ------------------------------------------------------------

EdgeColoring::EdgeColoring(const Graph& g, Color colors)
    : graph_(&g),
      colors_(colors),
      color_(g.num_edges(), kNoColor),
      at_(g.num_vertices() * (static_cast<std::size_t>(colors) + 1), kNone) {
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) uncolored_.insert(uncolored_.end(), e);
}

EdgeColoring::EdgeColoring(const Graph& g, Color colors, std::span<const Color> initial) : EdgeColoring(g, colors) {
  if (initial.size() != g.num_edges())
    throw DecodeError("coloring has " + std::to_string(initial.size()) + " entries for " +
                      std::to_string(g.num_edges()) + " edges");
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const Color c = initial[e];
    if (c == kNoColor) continue;
    if (c > colors) throw DecodeError("edge e_" + std::to_string(e + 1) + " has color " + std::to_string(c) + " > K");
    const Edge& ed = g.edge(e);
    if (edge_with_color(ed.u, c) || edge_with_color(ed.v, c))
      throw DecodeError("coloring is not proper at edge e_" + std::to_string(e + 1));
    assign(e, c);
  }
}

void EdgeColoring::assign(EdgeIndex e, Color c) {
  const Edge& ed = graph_->edge(e);
  const std::size_t stride = static_cast<std::size_t>(colors_) + 1;
  if (c == kNoColor || c > colors_) throw std::logic_error("color out of range");
  if (color_[e] != kNoColor) throw std::logic_error("edge already colored");
  auto& at_u = at_[ed.u * stride + c];
  auto& at_v = at_[ed.v * stride + c];
  if (at_u != kNone || at_v != kNone) throw std::logic_error("assignment would break properness");
  at_u = e;
  at_v = e;
  color_[e] = c;
  uncolored_.erase(e);
}

void EdgeColoring::clear(EdgeIndex e) {
  const Color c = color_[e];
  if (c == kNoColor) return;
  const Edge& ed = graph_->edge(e);
  const std::size_t stride = static_cast<std::size_t>(colors_) + 1;
  at_[ed.u * stride + c] = kNone;
  at_[ed.v * stride + c] = kNone;
  color_[e] = kNoColor;
  uncolored_.insert(e);
}

// -- Color selection ---------------------------------------------------------

std::vector<Color> excluded_colors(const EdgeColoring& phi, EdgeIndex e) {
  const Graph& g = phi.graph();
  const Edge& uv = g.edge(e);
  std::vector<Color> out;
  for (const Vertex end : {uv.u, uv.v})
    for (const Neighbor& nb : g.neighbors(end))
      if (nb.edge != e && phi.color(nb.edge) != kNoColor) out.push_back(phi.color(nb.edge));

  // Edges xy with ux and vy sharing a color.
  for (const Neighbor& ux : g.neighbors(uv.u)) {
    const Color c = phi.color(ux.edge);
    if (ux.edge == e || c == kNoColor) continue;
    const auto vy = phi.edge_with_color(uv.v, c);
    if (!vy) continue;
    const Vertex x = ux.vertex;
    const Vertex y = g.other(*vy, uv.v);
    if (x == y) continue;
    if (const auto xy = g.find_edge(x, y); xy && phi.color(*xy) != kNoColor) out.push_back(phi.color(*xy));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Color> available_colors(const EdgeColoring& phi, EdgeIndex e) {
  const auto excluded = excluded_colors(phi, e);
  std::vector<Color> out;
  out.reserve(phi.num_colors());
  auto it = excluded.begin();
  for (Color c = 1; c <= phi.num_colors(); ++c) {
    while (it != excluded.end() && *it < c) ++it;
    if (it == excluded.end() || *it != c) out.push_back(c);
  }
  return out;
}

// -- Cycles ------------------------------------------------------------------

Cycle orient_cycle(const Graph&, Cycle c) {
  const std::size_t len = c.edges.size();
  if (len < 3 || c.edges[1] < c.edges[len - 1]) return c;
  Cycle r;
  r.vertices.reserve(len);
  r.edges.reserve(len);
  r.vertices.push_back(c.vertices[1]);
  r.vertices.push_back(c.vertices[0]);
  for (std::size_t i = len - 1; i >= 2; --i) r.vertices.push_back(c.vertices[i]);
  r.edges.push_back(c.edges[0]);
  for (std::size_t i = len - 1; i >= 1; --i) r.edges.push_back(c.edges[i]);
  return r;
}

std::optional<Cycle> find_bicolored_cycle(const EdgeColoring& phi, EdgeIndex e) {
  const Graph& g = phi.graph();
  const Color c = phi.color(e);
  if (c == kNoColor) return std::nullopt;
  const Vertex u = g.edge(e).u;
  const Vertex v = g.edge(e).v;

  std::vector<Color> partners;
  for (const Neighbor& nb : g.neighbors(u)) {
    const Color p = phi.color(nb.edge);
    if (nb.edge != e && p != kNoColor && phi.edge_with_color(v, p)) partners.push_back(p);
  }
  std::sort(partners.begin(), partners.end());

  std::vector<Vertex> path;
  std::vector<EdgeIndex> path_edges;
  for (const Color partner : partners) {
    path.assign(1, u);
    path_edges.clear();
    Vertex cur = u;
    Color want = partner;
    bool closed = false;
    // The (c, partner) component through e is a path or an even cycle, so the
    // walk either ends or comes back to v within n moves.
    for (std::size_t guard = 0; guard <= g.num_vertices(); ++guard) {
      const auto f = phi.edge_with_color(cur, want);
      if (!f) break;
      cur = g.other(*f, cur);
      path_edges.push_back(*f);
      if (cur == v) {
        closed = true;
        break;
      }
      path.push_back(cur);
      want = want == partner ? c : partner;
    }
    if (!closed) continue;
    Cycle cyc;
    cyc.vertices.push_back(v);
    cyc.vertices.insert(cyc.vertices.end(), path.begin(), path.end());
    cyc.edges.push_back(e);
    cyc.edges.insert(cyc.edges.end(), path_edges.begin(), path_edges.end());
    return orient_cycle(g, std::move(cyc));
  }
  return std::nullopt;
}

namespace {

// Neighbor label at `cur` for the move to `next`, skipping `prev`.
std::uint32_t relative_label(const Graph& g, Vertex prev, Vertex cur, Vertex next) {
  const auto r = *g.neighbor_rank(cur, next);
  const auto rp = *g.neighbor_rank(cur, prev);
  return static_cast<std::uint32_t>(rp < r ? r : r + 1);
}

std::optional<Vertex> follow_label(const Graph& g, Vertex prev, Vertex cur, std::uint32_t label) {
  const auto nbrs = g.neighbors(cur);
  if (label < 1 || label + 1 > nbrs.size()) return std::nullopt;
  const auto rp = g.neighbor_rank(cur, prev);
  if (!rp) return std::nullopt;
  std::size_t idx = label - 1;
  if (idx >= *rp) ++idx;
  return nbrs[idx].vertex;
}

}  // namespace

CycleConflict encode_cycle(const Graph& g, const Cycle& cycle) {
  const std::size_t len = cycle.length();
  if (len < 6 || len % 2 != 0) throw std::invalid_argument("encode_cycle: cycle length must be even and >= 6");
  const Edge& first = g.edge(cycle.edges[0]);
  std::vector<Vertex> seq;
  seq.reserve(len);
  if (cycle.vertices[0] == first.u) {
    seq = cycle.vertices;
  } else {
    seq.push_back(cycle.vertices[1]);
    seq.push_back(cycle.vertices[0]);
    for (std::size_t i = len - 1; i >= 2; --i) seq.push_back(cycle.vertices[i]);
  }
  std::vector<std::uint32_t> labels;
  labels.reserve(len - 2);
  for (std::size_t i = 1; i + 1 < len; ++i) labels.push_back(relative_label(g, seq[i - 1], seq[i], seq[i + 1]));
  return {static_cast<std::uint32_t>(len / 2), theta_encode(labels, static_cast<std::uint32_t>(g.max_degree() - 1))};
}

Cycle decode_cycle(const Graph& g, EdgeIndex e, std::uint32_t k, const BigInt& ell) {
  if (k < 3) throw DecodeError("cycle half-length k=" + std::to_string(k) + " below 3");
  if (g.max_degree() < 2) throw DecodeError("graph has no cycles");
  std::vector<std::uint32_t> labels;
  try {
    labels = theta_decode(ell, 2 * k - 2, static_cast<std::uint32_t>(g.max_degree() - 1));
  } catch (const CodecError& err) {
    throw DecodeError(err.what());
  }
  const Edge& first = g.edge(e);
  Cycle cyc;
  cyc.vertices = {first.u, first.v};
  cyc.edges = {e};
  std::unordered_set<Vertex> seen{first.u, first.v};
  for (const auto label : labels) {
    const Vertex prev = cyc.vertices[cyc.vertices.size() - 2];
    const Vertex cur = cyc.vertices.back();
    const auto next = follow_label(g, prev, cur, label);
    if (!next) throw DecodeError("cycle label " + std::to_string(label) + " does not exist at vertex " + std::to_string(cur));
    if (!seen.insert(*next).second) throw DecodeError("decoded walk revisits vertex " + std::to_string(*next));
    cyc.edges.push_back(*g.find_edge(cur, *next));
    cyc.vertices.push_back(*next);
  }
  const auto closing = g.find_edge(cyc.vertices.back(), first.u);
  if (!closing) throw DecodeError("decoded walk does not close into a cycle");
  cyc.edges.push_back(*closing);
  return orient_cycle(g, std::move(cyc));
}

// -- Steps and runs ------------------------------------------------------------

StepResult step(EdgeColoring& phi, std::uint32_t rank) {
  if (phi.complete()) throw std::logic_error("step on a complete coloring");
  StepResult out;
  out.edge = *phi.uncolored().begin();
  const auto avail = available_colors(phi, out.edge);
  if (rank < 1 || rank > avail.size())
    throw std::logic_error("rank " + std::to_string(rank) + " exceeds the " + std::to_string(avail.size()) +
                           " available colors");
  out.color = avail[rank - 1];
  phi.assign(out.edge, out.color);
  if (auto cyc = find_bicolored_cycle(phi, out.edge)) {
    out.entry = encode_cycle(phi.graph(), *cyc);
    phi.clear(cyc->edges[0]);
    for (std::size_t i = 3; i < cyc->edges.size(); ++i) phi.clear(cyc->edges[i]);
    out.cycle = std::move(cyc);
  }
  return out;
}

RunOutcome run(const Graph& g, const RunConfig& config, bool keep_trace) {
  validate(config, g);
  EdgeColoring phi(g, config.colors);
  std::uint64_t budget = config.max_steps ? config.max_steps : default_max_steps(g.num_edges(), g.max_degree());
  const auto* explicit_ranks = std::get_if<InputVector>(&config.source);
  std::optional<RankSource> rng;
  if (explicit_ranks) {
    budget = std::min<std::uint64_t>(budget, explicit_ranks->size());
  } else {
    rng.emplace(std::get<std::uint64_t>(config.source));
  }

  RunOutcome out;
  while (!phi.complete() && out.steps < budget) {
    const std::uint32_t rank = explicit_ranks ? (*explicit_ranks)[out.steps] : rng->rank(config.rank_bound);
    auto res = step(phi, rank);
    if (keep_trace) {
      const auto uncolored = res.cycle ? static_cast<std::uint32_t>(res.cycle->length() - 2) : 0u;
      out.trace.push_back({res.edge, res.color, rank, uncolored, g.num_edges() - phi.uncolored().size()});
    }
    out.record.push_back(std::move(res.entry));
    out.ranks.push_back(rank);
    ++out.steps;
  }
  out.completed = phi.complete();
  out.coloring.assign(phi.colors().begin(), phi.colors().end());
  return out;
}

InputVector reconstruct_inputs(const Graph& g, Color colors, const Record& record, std::span<const Color> final_coloring) {
  struct Replayed {
    EdgeIndex edge;
    std::optional<Cycle> cycle;
  };
  // Forward pass: the uncolored set after every step follows from the record.
  std::set<EdgeIndex> uncolored;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) uncolored.insert(uncolored.end(), e);
  std::vector<Replayed> steps;
  steps.reserve(record.size());
  for (std::size_t i = 0; i < record.size(); ++i) {
    if (uncolored.empty()) throw DecodeError("record continues after the graph was fully colored (step " + std::to_string(i + 1) + ")");
    const EdgeIndex e = *uncolored.begin();
    Replayed rep{e, std::nullopt};
    if (!record[i]) {
      uncolored.erase(e);
    } else {
      rep.cycle = decode_cycle(g, e, record[i]->k, record[i]->ell);
      const auto& edges = rep.cycle->edges;
      for (std::size_t j = 1; j < edges.size(); ++j)
        if (uncolored.count(edges[j]))
          throw DecodeError("step " + std::to_string(i + 1) + ": cycle edge e_" + std::to_string(edges[j] + 1) +
                            " was not colored");
      for (std::size_t j = 3; j < edges.size(); ++j) uncolored.insert(edges[j]);
    }
    steps.push_back(std::move(rep));
  }
  if (final_coloring.size() != g.num_edges()) throw DecodeError("final coloring has the wrong length");
  for (EdgeIndex e = 0; e < g.num_edges(); ++e)
    if ((final_coloring[e] == kNoColor) != (uncolored.count(e) > 0))
      throw DecodeError("final coloring disagrees with the record at edge e_" + std::to_string(e + 1));

  // Backward pass: undo each step on the coloring and read off its rank.
  EdgeColoring phi(g, colors, final_coloring);
  InputVector ranks(record.size());
  for (std::size_t i = record.size(); i-- > 0;) {
    const auto& rep = steps[i];
    Color c = kNoColor;
    if (!rep.cycle) {
      c = phi.color(rep.edge);
      phi.clear(rep.edge);
    } else {
      const auto& edges = rep.cycle->edges;
      const Color even = phi.color(edges[1]);
      const Color odd = phi.color(edges[2]);
      if (even == kNoColor || odd == kNoColor) throw DecodeError("retained cycle edges are uncolored");
      for (std::size_t j = 3; j < edges.size(); ++j) {
        if (phi.color(edges[j]) != kNoColor) throw DecodeError("cycle edge unexpectedly colored");
        try {
          phi.assign(edges[j], j % 2 == 0 ? odd : even);
        } catch (const std::logic_error&) {
          throw DecodeError("step " + std::to_string(i + 1) + ": restoring the cycle breaks properness");
        }
      }
      c = odd;
    }
    const auto excluded = excluded_colors(phi, rep.edge);
    if (std::binary_search(excluded.begin(), excluded.end(), c))
      throw DecodeError("step " + std::to_string(i + 1) + ": color " + std::to_string(c) + " was not available");
    const auto below = std::lower_bound(excluded.begin(), excluded.end(), c) - excluded.begin();
    ranks[i] = c - static_cast<Color>(below);
  }
  if (phi.uncolored().size() != g.num_edges()) throw DecodeError("undoing every step leaves colored edges");
  return ranks;
}

// -- Verification ------------------------------------------------------------

namespace {

struct Dsu {
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;

  explicit Dsu(std::size_t n) : parent(n), stamp(n, 0) {}
  void reset() { ++epoch; }
  Vertex find(Vertex x) {
    if (stamp[x] != epoch) {
      stamp[x] = epoch;
      parent[x] = x;
    }
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

// Path between a and b using only `edges`, which form a forest containing both.
std::vector<std::pair<Vertex, EdgeIndex>> forest_path(const Graph& g, const std::vector<EdgeIndex>& edges, Vertex a, Vertex b) {
  std::unordered_map<Vertex, std::vector<std::pair<Vertex, EdgeIndex>>> adj;
  for (auto e : edges) {
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  std::unordered_map<Vertex, std::pair<Vertex, EdgeIndex>> parent;
  std::queue<Vertex> queue;
  queue.push(a);
  parent[a] = {a, 0};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    if (x == b) break;
    for (auto [y, e] : adj[x])
      if (!parent.count(y)) {
        parent[y] = {x, e};
        queue.push(y);
      }
  }
  std::vector<std::pair<Vertex, EdgeIndex>> path;  // (vertex, edge into it), from b back to a
  for (Vertex x = b; x != a; x = parent[x].first) path.push_back({x, parent[x].second});
  std::reverse(path.begin(), path.end());
  return path;
}

AcyclicVerdict verify_impl(const Graph& g, std::span<const Color> coloring, bool require_total) {
  if (coloring.size() != g.num_edges())
    throw std::invalid_argument("coloring has " + std::to_string(coloring.size()) + " entries for " +
                                std::to_string(g.num_edges()) + " edges");
  AcyclicVerdict verdict;
  Color max_color = 0;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    if (coloring[e] == kNoColor && require_total) {
      verdict.witness = UncoloredEdge{e};
      return verdict;
    }
    max_color = std::max(max_color, coloring[e]);
  }
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    std::vector<std::pair<Color, EdgeIndex>> at;
    for (const Neighbor& nb : g.neighbors(x))
      if (coloring[nb.edge] != kNoColor) at.push_back({coloring[nb.edge], nb.edge});
    std::sort(at.begin(), at.end());
    for (std::size_t i = 1; i < at.size(); ++i)
      if (at[i].first == at[i - 1].first) {
        verdict.witness = ClashingEdges{std::min(at[i - 1].second, at[i].second), std::max(at[i - 1].second, at[i].second)};
        return verdict;
      }
  }

  std::vector<std::vector<EdgeIndex>> classes(static_cast<std::size_t>(max_color) + 1);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e)
    if (coloring[e] != kNoColor) classes[coloring[e]].push_back(e);
  Dsu dsu(g.num_vertices());
  std::vector<EdgeIndex> merged;
  for (Color a = 1; a <= max_color; ++a) {
    if (classes[a].empty()) continue;
    for (Color b = a + 1; b <= max_color; ++b) {
      if (classes[b].empty()) continue;
      dsu.reset();
      merged.clear();
      std::merge(classes[a].begin(), classes[a].end(), classes[b].begin(), classes[b].end(), std::back_inserter(merged));
      std::vector<EdgeIndex> forest;
      for (const auto e : merged) {
        const Vertex x = g.edge(e).u;
        const Vertex y = g.edge(e).v;
        const Vertex rx = dsu.find(x);
        const Vertex ry = dsu.find(y);
        if (rx != ry) {
          dsu.parent[rx] = ry;
          forest.push_back(e);
          continue;
        }
        const auto path = forest_path(g, forest, x, y);
        Cycle cyc;
        cyc.vertices = {y, x};
        cyc.edges = {e};
        for (const auto& [vert, edge] : path) {
          cyc.edges.push_back(edge);
          if (vert != y) cyc.vertices.push_back(vert);
        }
        verdict.witness = TwoColoredCycle{std::move(cyc)};
        return verdict;
      }
    }
  }
  return verdict;
}

std::string edge_name(EdgeIndex e) {
  return "e_" + std::to_string(e + 1);
}

}  // namespace

AcyclicVerdict verify_acyclic(const Graph& g, std::span<const Color> coloring) { return verify_impl(g, coloring, true); }

AcyclicVerdict verify_partial_acyclic(const Graph& g, std::span<const Color> coloring) {
  return verify_impl(g, coloring, false);
}

std::string AcyclicVerdict::describe() const {
  return std::visit(
      [](const auto& w) -> std::string {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, std::monostate>) {
          return "acyclic";
        } else if constexpr (std::is_same_v<W, UncoloredEdge>) {
          return "edge " + edge_name(w.edge) + " is uncolored";
        } else if constexpr (std::is_same_v<W, ClashingEdges>) {
          return "adjacent edges " + edge_name(w.first) + " and " + edge_name(w.second) +
                 " share a color";
        } else {
          std::string s = "2-colored cycle through vertices";
          for (auto v : w.cycle.vertices) s += ' ' + std::to_string(v);
          return s;
        }
      },
      witness);
}

}  // namespace entcol
