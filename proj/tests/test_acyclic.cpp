#include <algorithm>
#include <set>

#include "doctest.h"
#include "entcol/acyclic.hpp"
#include "support.hpp"

using namespace entcol;

namespace {

std::vector<Color> colors_of(const EdgeColoring& phi) { return {phi.colors().begin(), phi.colors().end()}; }

// Checks that `c` is a closed walk through its edges in order, starting with e.
void check_cycle_shape(const Graph& g, const Cycle& c, EdgeIndex e) {
  REQUIRE(c.vertices.size() == c.edges.size());
  REQUIRE(c.edges.size() >= 3);
  CHECK(c.edges[0] == e);
  CHECK(c.edges[1] < c.edges.back());
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto f = g.find_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
    REQUIRE(f.has_value());
    CHECK(*f == c.edges[i]);
  }
  std::set<Vertex> distinct(c.vertices.begin(), c.vertices.end());
  CHECK(distinct.size() == c.vertices.size());
}

// Two-colored cycles among colored edges (for partial colorings).
std::size_t count_two_colored_cycles(const Graph& g, const std::vector<Color>& c, std::size_t max_len = 64) {
  std::size_t n = 0;
  for (const auto& cyc : oracle::all_cycles(g, max_len)) {
    const auto s = oracle::cycle_colors(cyc, c);
    if (!s.count(0) && s.size() <= 2) ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("acyclic") {

TEST_CASE("available colors on simple configurations") {
  const Graph g = oracle::path_graph(4);
  EdgeColoring phi(g, 6);
  CHECK(available_colors(phi, 1) == std::vector<Color>{1, 2, 3, 4, 5, 6});

  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EdgeColoring s(star, 5);
  s.assign(0, 1);
  s.assign(1, 2);
  CHECK(available_colors(s, 2) == std::vector<Color>{3, 4, 5});
  CHECK(excluded_colors(s, 2) == std::vector<Color>{1, 2});
}

TEST_CASE("rule two excludes the color that would close a 4-cycle") {
  // 4-cycle u=0, v=1, y=2, x=3 with ux and vy both colored 1 and xy colored 2.
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EdgeColoring phi(g, 5);
  phi.assign(1, 1);
  phi.assign(3, 1);
  phi.assign(2, 2);
  CHECK(excluded_colors(phi, 0) == std::vector<Color>{1, 2});
}

TEST_CASE("exclusion matches the brute-force rules on small graphs") {
  RankSource rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(3 + rng.below(4), 1 + rng.below(5), 6, rng);
    if (g.num_edges() == 0) continue;
    const Color k = static_cast<Color>(2 * g.max_degree() + 1 + rng.below(3));
    auto c = oracle::random_partial_edge_coloring(g, k, rng);
    const EdgeIndex e = static_cast<EdgeIndex>(rng.below(g.num_edges()));
    c[e] = 0;
    EdgeColoring phi(g, k, c);
    const auto want = oracle::brute_excluded(g, c, e);
    const auto got = excluded_colors(phi, e);
    CHECK(std::vector<Color>(want.begin(), want.end()) == got);
    CHECK(available_colors(phi, e).size() + got.size() == k);
  }
}

TEST_CASE("bicolored cycle on C6") {
  const Graph g = oracle::cycle_graph(6);
  EdgeColoring phi(g, 3, std::vector<Color>{1, 2, 1, 2, 1, 0});
  CHECK_FALSE(find_bicolored_cycle(phi, 0).has_value());
  phi.assign(5, 2);
  const auto cyc = find_bicolored_cycle(phi, 5);
  REQUIRE(cyc.has_value());
  CHECK(cyc->length() == 6);
  check_cycle_shape(g, *cyc, 5);
}

TEST_CASE("no bicolored cycle in a tree") {
  const Graph g(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  EdgeColoring phi(g, 3, std::vector<Color>{1, 2, 3, 2, 3});
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) CHECK_FALSE(find_bicolored_cycle(phi, e).has_value());
}

TEST_CASE("bicolored cycle search matches exhaustive enumeration") {
  RankSource rng(99);
  int found = 0;
  for (int trial = 0; trial < 16000; ++trial) {
    const Graph g = oracle::random_graph(4 + rng.below(5), 2 + rng.below(4), 6, rng);
    if (g.num_edges() == 0) continue;
    const Color k = static_cast<Color>(g.max_degree() + rng.below(2));
    const auto c = oracle::random_partial_edge_coloring(g, k, rng);
    const EdgeIndex e = static_cast<EdgeIndex>(rng.below(g.num_edges()));
    if (c[e] == 0) continue;
    EdgeColoring phi(g, k, c);

    // Expected: among 2-colored cycles through e, the one with smallest partner color.
    std::optional<oracle::SimpleCycle> best;
    Color best_partner = 0;
    for (const auto& cyc : oracle::all_cycles(g)) {
      if (std::find(cyc.edges.begin(), cyc.edges.end(), e) == cyc.edges.end()) continue;
      const auto s = oracle::cycle_colors(cyc, c);
      if (s.count(0) || s.size() != 2) continue;
      const Color partner = *s.begin() == c[e] ? *s.rbegin() : *s.begin();
      if (!best || partner < best_partner) {
        best = cyc;
        best_partner = partner;
      }
    }
    const auto got = find_bicolored_cycle(phi, e);
    REQUIRE(got.has_value() == best.has_value());
    if (!got) continue;
    ++found;
    check_cycle_shape(g, *got, e);
    CHECK(std::set<EdgeIndex>(got->edges.begin(), got->edges.end()) ==
          std::set<EdgeIndex>(best->edges.begin(), best->edges.end()));
  }
  CHECK(found > 100);
}

TEST_CASE("theta is a bijection for delta 4, k 3") {
  std::set<BigInt> seen;
  std::vector<std::uint32_t> w(4, 1);
  for (int i = 0; i < 81; ++i) {
    const BigInt ell = theta_encode(w, 3);
    CHECK(ell >= 1);
    CHECK(ell <= 81);
    CHECK(theta_decode(ell, 4, 3) == w);
    seen.insert(ell);
    for (std::size_t d = 0; d < 4; ++d) {
      if (++w[d] <= 3) break;
      w[d] = 1;
    }
  }
  CHECK(seen.size() == 81);
  CHECK(theta_range(4, 3) == 81);
}

TEST_CASE("cycle encoding on C6 is trivial") {
  const Graph g = oracle::cycle_graph(6);
  for (EdgeIndex e = 0; e < 6; ++e) {
    Cycle c;
    const Vertex start = g.edge(e).v;
    c.vertices.push_back(start);
    c.vertices.push_back(g.edge(e).u);
    c.edges.push_back(e);
    while (c.vertices.size() < 6) {
      const Vertex cur = c.vertices.back();
      const Vertex prev = c.vertices[c.vertices.size() - 2];
      for (const auto& nb : g.neighbors(cur))
        if (nb.vertex != prev) {
          c.edges.push_back(nb.edge);
          c.vertices.push_back(nb.vertex);
          break;
        }
    }
    c.edges.push_back(*g.find_edge(c.vertices.back(), start));
    const auto cc = encode_cycle(g, orient_cycle(g, c));
    CHECK(cc.k == 3);
    CHECK(cc.ell == 1);
    CHECK(decode_cycle(g, e, 3, 1) == orient_cycle(g, c));
  }
}

TEST_CASE("encode and decode invert each other on every long even cycle") {
  const std::vector<Graph> graphs{oracle::complete_graph(6), oracle::complete_graph(7), oracle::petersen(),
                                  generate_graph(GraphModel::CompleteBipartite, {.n = 4, .n2 = 4}, 0),
                                  oracle::cycle_graph(8)};
  for (const Graph& g : graphs) {
    std::map<std::tuple<EdgeIndex, std::uint32_t, BigInt>, int> codes;
    std::size_t checked = 0;
    for (const auto& sc : oracle::all_cycles(g, 10)) {
      const std::size_t len = sc.edges.size();
      if (len < 6 || len % 2) continue;
      for (std::size_t r = 0; r < len; ++r) {
        // Rotate so that edge r comes first.
        Cycle c;
        for (std::size_t i = 0; i < len; ++i) {
          c.vertices.push_back(sc.vertices[(r + i) % len]);
          c.edges.push_back(sc.edges[(r + i) % len]);
        }
        c = orient_cycle(g, c);
        const auto code = encode_cycle(g, c);
        CHECK(code.k == len / 2);
        CHECK(code.ell >= 1);
        CHECK(code.ell <= theta_range(len - 2, static_cast<std::uint32_t>(g.max_degree() - 1)));
        CHECK(decode_cycle(g, c.edges[0], code.k, code.ell) == c);
        ++codes[{c.edges[0], code.k, code.ell}];
        ++checked;
      }
    }
    CHECK(checked > 0);
    for (const auto& [key, count] : codes) CHECK(count == 1);
  }
}

TEST_CASE("decode rejects labels that leave the graph") {
  const Graph g = oracle::cycle_graph(6);
  CHECK_THROWS_AS(decode_cycle(g, 0, 4, 1), DecodeError);
  CHECK_THROWS_AS(decode_cycle(g, 0, 3, 2), DecodeError);
  CHECK_THROWS_AS(decode_cycle(g, 0, 2, 1), DecodeError);
  const Graph k4 = oracle::complete_graph(4);
  CHECK_THROWS_AS(decode_cycle(k4, 0, 3, 1), DecodeError);
}

TEST_CASE("first step colors e1 with F1") {
  const Graph g = oracle::complete_graph(5);
  for (std::uint32_t f = 1; f <= 4; ++f) {
    EdgeColoring phi(g, 10);
    const auto res = step(phi, f);
    CHECK(res.edge == 0);
    CHECK(res.color == f);
    CHECK_FALSE(res.entry.has_value());
  }
}

TEST_CASE("single conflict on C6") {
  const Graph g = oracle::cycle_graph(6);
  RunConfig cfg{.colors = 4, .rank_bound = 2, .max_steps = 0, .source = InputVector(6, 1)};
  const auto out = run(g, cfg, true);
  REQUIRE(out.steps == 6);
  for (std::size_t i = 0; i < 5; ++i) CHECK_FALSE(out.record[i].has_value());
  REQUIRE(out.record[5].has_value());
  CHECK(out.record[5]->k == 3);
  CHECK(out.record[5]->ell == 1);
  CHECK(out.trace[5].uncolored == 4);
  CHECK(std::count(out.coloring.begin(), out.coloring.end(), kNoColor) == 4);
  CHECK_FALSE(out.completed);
  CHECK(reconstruct_inputs(g, 4, out.record, out.coloring) == InputVector(6, 1));
}

TEST_CASE("runs on trees never conflict") {
  const Graph g(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  const auto out = run(g, {.colors = 6, .rank_bound = 2, .max_steps = 0, .source = std::uint64_t{3}});
  CHECK(out.completed);
  CHECK(out.steps == g.num_edges());
  CHECK(std::none_of(out.record.begin(), out.record.end(), [](const auto& r) { return r.has_value(); }));
  CHECK(verify_acyclic(g, out.coloring).accepted());
  // Without conflicts the ranks are read straight off the final colors.
  CHECK(reconstruct_inputs(g, 6, out.record, out.coloring) == out.ranks);
}

TEST_CASE("C6 with four colors completes") {
  const Graph g = oracle::cycle_graph(6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto out = run(g, {.colors = 4, .rank_bound = 2, .max_steps = 0, .source = seed});
    REQUIRE(out.completed);
    CHECK(verify_acyclic(g, out.coloring).accepted());
    CHECK(std::set<Color>(out.coloring.begin(), out.coloring.end()).size() >= 3);
  }
}

TEST_CASE("random delta 5 graph with 4 delta - 4 colors") {
  const Graph g = generate_graph(GraphModel::RandomMaxDegree, {.n = 120, .delta = 5}, 8);
  REQUIRE(g.max_degree() == 5);
  const auto out = run(g, {.colors = 16, .rank_bound = 8, .max_steps = 0, .source = std::uint64_t{1}});
  CHECK(out.completed);
  CHECK(verify_acyclic(g, out.coloring).accepted());
}

TEST_CASE("step invariants hold throughout random runs") {
  RankSource rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(7 + rng.below(3), 1, 2, rng);
    if (g.num_edges() == 0) continue;
    const std::size_t delta = g.max_degree();
    const Color k = static_cast<Color>(2 * (delta - 1) + 1 + rng.below(2));
    const std::uint32_t bound = static_cast<std::uint32_t>(rank_capacity(k, delta));
    EdgeColoring phi(g, k);
    for (int s = 0; s < 60 && !phi.complete(); ++s) {
      CHECK(available_colors(phi, *phi.uncolored().begin()).size() >= bound);
      const auto before = phi.uncolored().size();
      const auto res = step(phi, rng.rank(bound));
      const auto c = colors_of(phi);
      CHECK(oracle::is_proper_edge_coloring(g, c, false));
      CHECK(verify_partial_acyclic(g, c).accepted());
      CHECK(count_two_colored_cycles(g, c) == 0);
      if (res.entry) {
        CHECK(res.entry->k >= 3);
        CHECK(phi.uncolored().size() == before - 1 + 2 * res.entry->k - 2);
      } else {
        CHECK(phi.uncolored().size() == before - 1);
      }
    }
  }
}

TEST_CASE("selection rule prevents 2-colored 4-cycles") {
  const Graph g = generate_graph(GraphModel::CompleteBipartite, {.n = 3, .n2 = 3}, 0);
  RankSource rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    EdgeColoring phi(g, 5);
    for (int s = 0; s < 40 && !phi.complete(); ++s) {
      step(phi, rng.rank(1));
      CHECK(count_two_colored_cycles(g, colors_of(phi), 4) == 0);
    }
  }
}

TEST_CASE("runs are deterministic") {
  const Graph g = generate_graph(GraphModel::RandomMaxDegree, {.n = 50, .delta = 4}, 2);
  const RunConfig cfg{.colors = 8, .rank_bound = 2, .max_steps = 0, .source = std::uint64_t{77}};
  const auto a = run(g, cfg, true);
  const auto b = run(g, cfg, true);
  CHECK(a.coloring == b.coloring);
  CHECK(a.record == b.record);
  CHECK(a.ranks == b.ranks);
  CHECK(a.steps == b.steps);
}

TEST_CASE("config validation") {
  const Graph g = generate_graph(GraphModel::RandomMaxDegree, {.n = 30, .delta = 5}, 1);
  CHECK_THROWS_AS(run(g, {.colors = 3, .rank_bound = 1}), ConfigError);
  CHECK_THROWS_AS(run(g, {.colors = 16, .rank_bound = 9}), ConfigError);
  CHECK_THROWS_AS(run(g, {.colors = 16, .rank_bound = 0}), ConfigError);
  CHECK_THROWS_AS(run(g, {.colors = 16, .rank_bound = 8, .max_steps = 1}), ConfigError);
  CHECK_THROWS_AS(run(g, {.colors = 16, .rank_bound = 8, .max_steps = 0, .source = InputVector{1, 9}}), ConfigError);
  CHECK(default_max_steps(100, 5) == 4 * static_cast<std::uint64_t>(std::ceil((100 * std::log(160.0) + 1) / std::log(1.1))));
}

TEST_CASE("reconstruction round trip on mixed families") {
  RankSource rng(123);
  int conflicts = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t delta = 3 + seed % 4;
    const Graph g = generate_graph(GraphModel::RandomMaxDegree, {.n = 24, .delta = delta}, seed);
    const Color k = static_cast<Color>(2 * (g.max_degree() - 1) + 1 + seed % 3);
    const std::uint32_t bound = 1 + static_cast<std::uint32_t>(seed % 3);
    const auto out = run(g, {.colors = k, .rank_bound = bound, .max_steps = 0, .source = seed});
    if (std::any_of(out.record.begin(), out.record.end(), [](const auto& r) { return r.has_value(); })) ++conflicts;
    CHECK(reconstruct_inputs(g, k, out.record, out.coloring) == out.ranks);
    // Any prefix of the run is reconstructible too.
    const std::size_t cut = rng.below(out.steps + 1);
    const InputVector prefix(out.ranks.begin(), out.ranks.begin() + static_cast<std::ptrdiff_t>(cut));
    const auto partial = run(g, {.colors = k, .rank_bound = bound, .max_steps = 0, .source = prefix});
    CHECK(reconstruct_inputs(g, k, partial.record, partial.coloring) == prefix);
  }
  CHECK(conflicts > 20);
}

TEST_CASE("reconstruction rejects inconsistent input") {
  const Graph g = oracle::cycle_graph(6);
  const auto out = run(g, {.colors = 4, .rank_bound = 2, .max_steps = 0, .source = InputVector(6, 1)});
  auto bad = out.coloring;
  const auto it = std::find(bad.begin(), bad.end(), kNoColor);
  *it = 3;
  CHECK_THROWS_AS(reconstruct_inputs(g, 4, out.record, bad), DecodeError);
  Record longer = out.record;
  longer.insert(longer.end(), 10, std::nullopt);
  CHECK_THROWS_AS(reconstruct_inputs(g, 4, longer, out.coloring), DecodeError);
}

TEST_CASE("verifier on named colorings") {
  // K4 with its three perfect matchings as color classes: each pair of
  // classes forms a 4-cycle.
  const Graph k4 = oracle::complete_graph(4);  // 01 02 03 12 13 23
  const std::vector<Color> matching{1, 2, 3, 3, 2, 1};
  const auto v = verify_acyclic(k4, matching);
  CHECK_FALSE(v.accepted());
  CHECK_FALSE(oracle::brute_acyclic(k4, matching));
  CHECK(verify_acyclic(k4, std::vector<Color>{1, 2, 3, 4, 5, 1}).accepted());

  const Graph c4 = oracle::cycle_graph(4);
  const auto w = verify_acyclic(c4, std::vector<Color>{1, 2, 1, 2});
  REQUIRE(std::holds_alternative<TwoColoredCycle>(w.witness));
  CHECK(std::get<TwoColoredCycle>(w.witness).cycle.length() == 4);
  CHECK(std::holds_alternative<ClashingEdges>(verify_acyclic(c4, std::vector<Color>{1, 1, 2, 3}).witness));
  CHECK(std::holds_alternative<UncoloredEdge>(verify_acyclic(c4, std::vector<Color>{1, 0, 2, 3}).witness));
  CHECK(verify_acyclic(c4, std::vector<Color>{1, 2, 1, 3}).accepted());
}

TEST_CASE("verifier agrees with cycle enumeration") {
  RankSource rng(7);
  int rejected = 0;
  for (int trial = 0; trial < 800; ++trial) {
    const Graph g = oracle::random_graph(3 + rng.below(6), 2 + rng.below(4), 6, rng);
    if (g.num_edges() == 0) continue;
    std::vector<Color> c(g.num_edges());
    const Color k = static_cast<Color>(g.max_degree() + 1 + rng.below(3));
    for (auto& x : c) x = rng.rank(k);
    if (rng.below(2)) {
      // Mostly proper: greedy with random picks.
      for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        std::set<Color> used;
        for (Vertex x : {g.edge(e).u, g.edge(e).v})
          for (const auto& nb : g.neighbors(x))
            if (nb.edge < e) used.insert(c[nb.edge]);
        std::vector<Color> free;
        for (Color col = 1; col <= 2 * g.max_degree(); ++col)
          if (!used.count(col)) free.push_back(col);
        c[e] = free[rng.below(std::min<std::size_t>(free.size(), 3))];
      }
    }
    const auto verdict = verify_acyclic(g, c);
    CHECK(verdict.accepted() == oracle::brute_acyclic(g, c));
    if (const auto* t = std::get_if<TwoColoredCycle>(&verdict.witness)) {
      ++rejected;
      std::set<Color> seen;
      for (auto e : t->cycle.edges) seen.insert(c[e]);
      CHECK(seen.size() == 2);
      for (std::size_t i = 0; i < t->cycle.length(); ++i)
        CHECK(g.find_edge(t->cycle.vertices[i], t->cycle.vertices[(i + 1) % t->cycle.length()]) == t->cycle.edges[i]);
    }
  }
  CHECK(rejected > 20);
}

}
