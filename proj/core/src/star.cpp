#include "entcol/star.hpp"

#include <algorithm>
#include <set>

#include "entcol/random.hpp"

namespace entcol {

void validate(const StarConfig& config, const Graph& g) {
  if (config.k < 2) throw ConfigError("star-k coloring needs k >= 2");
  if (config.rank_bound < 1) throw ConfigError("rank bound K must be >= 1");
  if (config.max_steps != 0 && config.max_steps < g.num_vertices())
    throw ConfigError("max_steps must be at least the number of vertices");
  if (const auto* ranks = std::get_if<InputVector>(&config.source)) {
    for (std::size_t i = 0; i < ranks->size(); ++i)
      if ((*ranks)[i] < 1 || (*ranks)[i] > config.rank_bound)
        throw ConfigError("input rank r_" + std::to_string(i + 1) + " outside 1.." + std::to_string(config.rank_bound));
  }
}

Color star_palette(const StarConfig& config, const Graph& g) {
  return config.rank_bound + static_cast<Color>(g.max_degree());
}

std::uint32_t retained_pair_start(std::size_t path_vertices, std::uint32_t position) {
  const auto last = static_cast<std::int64_t>(path_vertices) - 1;
  const std::int64_t front_gap = static_cast<std::int64_t>(position) - 1;
  const std::int64_t back_gap = last - 1 - position;
  return front_gap > back_gap ? 0u : static_cast<std::uint32_t>(last - 1);
}

namespace {

// Alternating simple paths leaving v, excluding v, grouped by length.
void collect_arms(const Graph& g, std::span<const Color> coloring, Color here, Color there, std::vector<Vertex>& arm,
                  std::vector<char>& on_path, std::size_t max_len, std::vector<std::vector<std::vector<Vertex>>>& out) {
  out[arm.size()].push_back(arm);
  if (arm.size() == max_len) return;
  const Vertex tip = arm.back();
  for (const Neighbor& nb : g.neighbors(tip)) {
    if (on_path[nb.vertex] || coloring[nb.vertex] != there) continue;
    on_path[nb.vertex] = 1;
    arm.push_back(nb.vertex);
    collect_arms(g, coloring, there, here, arm, on_path, max_len, out);
    arm.pop_back();
    on_path[nb.vertex] = 0;
  }
}

bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (auto x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

}  // namespace

std::optional<std::vector<Vertex>> find_bicolored_path(const Graph& g, std::span<const Color> coloring, Vertex v,
                                                       std::uint32_t path_vertices) {
  const Color c = coloring[v];
  if (c == kNoColor || path_vertices < 2) return std::nullopt;
  const std::size_t span_len = path_vertices - 1;

  std::set<Color> partners;
  for (const Neighbor& nb : g.neighbors(v))
    if (coloring[nb.vertex] != kNoColor && coloring[nb.vertex] != c) partners.insert(coloring[nb.vertex]);

  std::optional<std::vector<Vertex>> best;
  std::vector<char> on_path(g.num_vertices(), 0);
  for (const Color p : partners) {
    // arms[len] holds every alternating arm with `len` vertices beyond v.
    std::vector<std::vector<std::vector<Vertex>>> arms(span_len + 1);
    arms[0].push_back({});
    on_path[v] = 1;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (coloring[nb.vertex] != p) continue;
      std::vector<Vertex> arm{nb.vertex};
      on_path[nb.vertex] = 1;
      collect_arms(g, coloring, p, c, arm, on_path, span_len, arms);
      on_path[nb.vertex] = 0;
    }
    on_path[v] = 0;

    for (std::size_t left_len = 0; left_len <= span_len; ++left_len) {
      for (const auto& left : arms[left_len]) {
        for (const auto& right : arms[span_len - left_len]) {
          if (!disjoint(left, right)) continue;
          std::vector<Vertex> path(left.rbegin(), left.rend());
          path.push_back(v);
          path.insert(path.end(), right.begin(), right.end());
          if (path.front() > path.back()) std::reverse(path.begin(), path.end());
          if (!best || path < *best) best = std::move(path);
        }
      }
    }
  }
  return best;
}

namespace {

std::uint32_t rank_skipping(const Graph& g, Vertex prev, Vertex cur, Vertex next) {
  const auto r = *g.neighbor_rank(cur, next);
  const auto rp = *g.neighbor_rank(cur, prev);
  return static_cast<std::uint32_t>(rp < r ? r : r + 1);
}

Vertex step_skipping(const Graph& g, Vertex prev, Vertex cur, std::uint32_t label) {
  const auto nbrs = g.neighbors(cur);
  if (label < 1 || label + 1 > nbrs.size())
    throw DecodeError("path label " + std::to_string(label) + " does not exist at vertex " + std::to_string(cur));
  std::size_t idx = label - 1;
  if (idx >= *g.neighbor_rank(cur, prev)) ++idx;
  return nbrs[idx].vertex;
}

}  // namespace

PathConflict encode_path(const Graph& g, std::span<const Vertex> path, Vertex v) {
  const auto it = std::find(path.begin(), path.end(), v);
  if (it == path.end()) throw std::invalid_argument("encode_path: vertex not on path");
  const auto q = static_cast<std::size_t>(it - path.begin());
  const std::size_t last = path.size() - 1;
  PathConflict out;
  out.position = static_cast<std::uint32_t>(q);

  // Arms as vertex sequences starting at v.
  std::vector<Vertex> first_arm;
  std::vector<Vertex> second_arm;
  if (q > 0) {
    for (std::size_t i = q + 1; i-- > 0;) first_arm.push_back(path[i]);
    for (std::size_t i = q; i <= last && q < last; ++i) second_arm.push_back(path[i]);
  } else {
    for (std::size_t i = 0; i <= last; ++i) first_arm.push_back(path[i]);
  }
  out.anchor = static_cast<std::uint32_t>(*g.neighbor_rank(v, first_arm[1]) + 1);
  for (std::size_t i = 1; i + 1 < first_arm.size(); ++i)
    out.labels.push_back(rank_skipping(g, first_arm[i - 1], first_arm[i], first_arm[i + 1]));
  if (!second_arm.empty()) {
    out.labels.push_back(rank_skipping(g, first_arm[1], v, second_arm[1]));
    for (std::size_t i = 1; i + 1 < second_arm.size(); ++i)
      out.labels.push_back(rank_skipping(g, second_arm[i - 1], second_arm[i], second_arm[i + 1]));
  }
  return out;
}

std::vector<Vertex> decode_path(const Graph& g, Vertex v, std::uint32_t k, const PathConflict& entry) {
  const std::size_t count = 2 * static_cast<std::size_t>(k);
  const std::size_t last = count - 1;
  const std::size_t q = entry.position;
  if (q > last) throw DecodeError("path position " + std::to_string(q) + " outside the path");
  if (entry.labels.size() != count - 2)
    throw DecodeError("path entry has " + std::to_string(entry.labels.size()) + " labels, expected " + std::to_string(count - 2));
  const auto nbrs = g.neighbors(v);
  if (entry.anchor < 1 || entry.anchor > nbrs.size()) throw DecodeError("path anchor outside the neighborhood");

  const std::size_t first_len = q > 0 ? q : last;
  const std::size_t second_len = q > 0 ? last - q : 0;
  std::size_t next_label = 0;
  std::vector<Vertex> first_arm{v, nbrs[entry.anchor - 1].vertex};
  while (first_arm.size() < first_len + 1)
    first_arm.push_back(step_skipping(g, first_arm[first_arm.size() - 2], first_arm.back(), entry.labels[next_label++]));
  std::vector<Vertex> second_arm;
  if (second_len > 0) {
    second_arm = {v, step_skipping(g, first_arm[1], v, entry.labels[next_label++])};
    while (second_arm.size() < second_len + 1)
      second_arm.push_back(step_skipping(g, second_arm[second_arm.size() - 2], second_arm.back(), entry.labels[next_label++]));
  }

  std::vector<Vertex> path;
  if (q > 0) {
    path.assign(first_arm.rbegin(), first_arm.rend());
    for (std::size_t i = 1; i < second_arm.size(); ++i) path.push_back(second_arm[i]);
  } else {
    path = first_arm;
  }
  std::vector<Vertex> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DecodeError("decoded path revisits a vertex");
  if (path.front() > path.back()) throw DecodeError("decoded path is not in canonical orientation");
  return path;
}

namespace {

// Distinct colors on colored neighbors of v, ascending.
std::vector<Color> neighborhood_colors(const Graph& g, std::span<const Color> coloring, Vertex v) {
  std::vector<Color> out;
  for (const Neighbor& nb : g.neighbors(v))
    if (coloring[nb.vertex] != kNoColor) out.push_back(coloring[nb.vertex]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

StarRunOutcome run_star(const Graph& g, const StarConfig& config) {
  validate(config, g);
  const Color palette = star_palette(config, g);
  const std::uint32_t path_vertices = 2 * config.k;
  std::uint64_t budget = config.max_steps ? config.max_steps : default_max_steps(g.num_vertices(), g.max_degree());
  const auto* explicit_ranks = std::get_if<InputVector>(&config.source);
  std::optional<RankSource> rng;
  if (explicit_ranks) {
    budget = std::min<std::uint64_t>(budget, explicit_ranks->size());
  } else {
    rng.emplace(std::get<std::uint64_t>(config.source));
  }

  StarRunOutcome out;
  out.coloring.assign(g.num_vertices(), kNoColor);
  std::set<Vertex> uncolored;
  for (Vertex v = 0; v < g.num_vertices(); ++v) uncolored.insert(uncolored.end(), v);

  while (!uncolored.empty() && out.steps < budget) {
    const Vertex v = *uncolored.begin();
    const std::uint32_t r = explicit_ranks ? (*explicit_ranks)[out.steps] : rng->rank(config.rank_bound);
    const auto forbidden = neighborhood_colors(g, out.coloring, v);
    // r-th color of {1..palette} missing from the neighborhood; at most Δ are missing.
    Color c = 0;
    std::uint32_t seen = 0;
    auto it = forbidden.begin();
    for (Color x = 1; x <= palette; ++x) {
      while (it != forbidden.end() && *it < x) ++it;
      if (it != forbidden.end() && *it == x) continue;
      if (++seen == r) {
        c = x;
        break;
      }
    }
    out.coloring[v] = c;
    uncolored.erase(v);

    StarRecordEntry entry;
    if (auto path = find_bicolored_path(g, out.coloring, v, path_vertices)) {
      const auto enc = encode_path(g, *path, v);
      const auto keep = retained_pair_start(path->size(), enc.position);
      for (std::size_t i = 0; i < path->size(); ++i) {
        if (i == keep || i == keep + 1) continue;
        out.coloring[(*path)[i]] = kNoColor;
        uncolored.insert((*path)[i]);
      }
      entry = enc;
    }
    out.record.push_back(std::move(entry));
    out.ranks.push_back(r);
    ++out.steps;
  }
  out.completed = uncolored.empty();
  return out;
}

InputVector reconstruct_star_inputs(const Graph& g, const StarConfig& config, const StarRecord& record,
                                    std::span<const Color> final_coloring) {
  const Color palette = star_palette(config, g);
  struct Replayed {
    Vertex vertex;
    std::vector<Vertex> path;
    std::uint32_t keep = 0;
  };
  std::set<Vertex> uncolored;
  for (Vertex v = 0; v < g.num_vertices(); ++v) uncolored.insert(uncolored.end(), v);
  std::vector<Replayed> steps;
  steps.reserve(record.size());
  for (std::size_t i = 0; i < record.size(); ++i) {
    if (uncolored.empty()) throw DecodeError("record continues after every vertex was colored");
    Replayed rep{*uncolored.begin(), {}, 0};
    uncolored.erase(rep.vertex);
    if (record[i]) {
      rep.path = decode_path(g, rep.vertex, config.k, *record[i]);
      rep.keep = retained_pair_start(rep.path.size(), record[i]->position);
      if (rep.path[record[i]->position] != rep.vertex) throw DecodeError("path position does not hold the colored vertex");
      for (std::size_t j = 0; j < rep.path.size(); ++j) {
        if (rep.path[j] != rep.vertex && uncolored.count(rep.path[j]))
          throw DecodeError("step " + std::to_string(i + 1) + ": path vertex " + std::to_string(rep.path[j]) +
                            " was not colored");
        if (j != rep.keep && j != rep.keep + 1) uncolored.insert(rep.path[j]);
      }
    }
    steps.push_back(std::move(rep));
  }
  if (final_coloring.size() != g.num_vertices()) throw DecodeError("final coloring has the wrong length");
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if ((final_coloring[v] == kNoColor) != (uncolored.count(v) > 0))
      throw DecodeError("final coloring disagrees with the record at vertex " + std::to_string(v));

  std::vector<Color> coloring(final_coloring.begin(), final_coloring.end());
  InputVector ranks(record.size());
  for (std::size_t i = record.size(); i-- > 0;) {
    const auto& rep = steps[i];
    Color c = kNoColor;
    if (rep.path.empty()) {
      c = coloring[rep.vertex];
    } else {
      const Color a = coloring[rep.path[rep.keep]];
      const Color b = coloring[rep.path[rep.keep + 1]];
      if (a == kNoColor || b == kNoColor) throw DecodeError("retained path vertices are uncolored");
      for (std::size_t j = 0; j < rep.path.size(); ++j) {
        if (j == rep.keep || j == rep.keep + 1) continue;
        if (coloring[rep.path[j]] != kNoColor) throw DecodeError("uncolored path vertex carries a color");
        coloring[rep.path[j]] = (j % 2 == rep.keep % 2) ? a : b;
      }
      c = coloring[rep.vertex];
    }
    coloring[rep.vertex] = kNoColor;
    const auto forbidden = neighborhood_colors(g, coloring, rep.vertex);
    if (c == kNoColor || c > palette || std::binary_search(forbidden.begin(), forbidden.end(), c))
      throw DecodeError("step " + std::to_string(i + 1) + ": color " + std::to_string(c) + " was not available");
    const auto below = std::lower_bound(forbidden.begin(), forbidden.end(), c) - forbidden.begin();
    ranks[i] = c - static_cast<Color>(below);
    if (ranks[i] > config.rank_bound) throw DecodeError("step " + std::to_string(i + 1) + ": rank exceeds K");
  }
  for (const Color c : coloring)
    if (c != kNoColor) throw DecodeError("undoing every step leaves colored vertices");
  return ranks;
}

namespace {

bool extend_two_colored(const Graph& g, std::span<const Color> coloring, std::vector<Vertex>& path,
                        std::vector<char>& on_path, std::size_t want) {
  if (path.size() == want) return true;
  const Vertex tip = path.back();
  const Color need = coloring[path[path.size() - 2]];
  for (const Neighbor& nb : g.neighbors(tip)) {
    if (on_path[nb.vertex] || coloring[nb.vertex] != need) continue;
    on_path[nb.vertex] = 1;
    path.push_back(nb.vertex);
    if (extend_two_colored(g, coloring, path, on_path, want)) return true;
    path.pop_back();
    on_path[nb.vertex] = 0;
  }
  return false;
}

}  // namespace

StarVerdict verify_star_k(const Graph& g, std::span<const Color> coloring, std::uint32_t k) {
  if (coloring.size() != g.num_vertices()) throw std::invalid_argument("coloring length differs from vertex count");
  StarVerdict verdict;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (coloring[v] == kNoColor) {
      verdict.witness = UncoloredVertex{v};
      return verdict;
    }
  for (const Edge& e : g.edges())
    if (coloring[e.u] == coloring[e.v]) {
      verdict.witness = ClashingVertices{e.u, e.v};
      return verdict;
    }
  const std::size_t want = 2 * static_cast<std::size_t>(k);
  std::vector<char> on_path(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (const Neighbor& nb : g.neighbors(v)) {
      std::vector<Vertex> path{v, nb.vertex};
      on_path[v] = on_path[nb.vertex] = 1;
      const bool found = extend_two_colored(g, coloring, path, on_path, want);
      for (auto x : path) on_path[x] = 0;
      if (found) {
        verdict.witness = TwoColoredPath{std::move(path)};
        return verdict;
      }
    }
  }
  return verdict;
}

std::string StarVerdict::describe() const {
  return std::visit(
      [](const auto& w) -> std::string {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, std::monostate>) {
          return "star-k coloring";
        } else if constexpr (std::is_same_v<W, UncoloredVertex>) {
          return "vertex " + std::to_string(w.vertex) + " is uncolored";
        } else if constexpr (std::is_same_v<W, ClashingVertices>) {
          return "adjacent vertices " + std::to_string(w.first) + " and " + std::to_string(w.second) + " share a color";
        } else {
          std::string s = "2-colored path";
          for (auto v : w.vertices) s += ' ' + std::to_string(v);
          return s;
        }
      },
      witness);
}

}  // namespace entcol
