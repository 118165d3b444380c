#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include "entcol/acyclic.hpp"
#include "entcol/bounds.hpp"
#include "entcol/dyck.hpp"
#include "entcol/graph.hpp"
#include "entcol/star.hpp"
#include "json.hpp"

namespace entcol::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fixed(double x, int places = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  return buf;
}

Graph load(const InputOptions& in) {
  if (in.input.empty()) throw UsageError("--input is required");
  return load_graph_file(in.input, parse_graph_format(in.format));
}

// "inf", "infinite" and "none" mean no cycle.
std::optional<std::size_t> parse_girth(const std::string& text) {
  if (text == "inf" || text == "infinite" || text == "none") return std::nullopt;
  std::size_t pos = 0;
  unsigned long long g = 0;
  try {
    g = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || g < 3) throw UsageError("girth must be an integer >= 3 or 'inf', got '" + text + "'");
  return static_cast<std::size_t>(g);
}

DescentSet parse_set(const std::string& text) {
  try {
    return DescentSet::parse(text);
  } catch (const DescentSetError& e) {
    throw UsageError(e.what());
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

Json girth_json(const std::optional<std::size_t>& girth) { return girth ? Json(*girth) : Json(nullptr); }

template <typename RecordT>
Json record_summary(const RecordT& record, auto uncolored_of) {
  std::map<std::uint32_t, std::uint64_t> histogram;
  std::uint64_t conflicts = 0;
  for (const auto& entry : record) {
    if (!entry) continue;
    ++conflicts;
    ++histogram[uncolored_of(*entry)];
  }
  Json hist = Json::object();
  for (const auto& [len, count] : histogram) hist[std::to_string(len)] = count;
  return Json{{"conflicts", conflicts}, {"descent_histogram", hist}};
}

}  // namespace

int cmd_color(const ColorOptions& opt) {
  const Graph g = load(opt.in);
  const GraphStats stats = compute_stats(g);
  const std::size_t delta = stats.delta;
  const double dm1 = delta >= 1 ? static_cast<double>(delta - 1) : 0.0;

  RunConfig cfg;
  if (opt.colors) {
    cfg.colors = *opt.colors;
    const auto cap = rank_capacity(cfg.colors, delta);
    if (cap < 1)
      throw UsageError("K=" + std::to_string(cfg.colors) + " is too small for max degree " + std::to_string(delta) +
                       ": K - 2(D-1) = " + std::to_string(cap) + " < 1");
    cfg.rank_bound = static_cast<std::uint32_t>(cap);
  } else if (opt.gamma) {
    if (!(*opt.gamma > 0)) throw UsageError("--gamma must be positive");
    cfg.rank_bound = static_cast<std::uint32_t>(std::max<std::int64_t>(1, ceil_snapped(*opt.gamma * dm1)));
    cfg.colors = static_cast<Color>(2 * static_cast<std::uint32_t>(dm1) + cfg.rank_bound);
  } else {
    const auto girth = opt.girth ? parse_girth(*opt.girth) : stats.girth;
    const auto bound = acyclic_color_bound(delta, girth);
    cfg.colors = bound.colors;
    cfg.rank_bound = bound.rank_bound;
  }
  cfg.max_steps = opt.max_steps;
  cfg.source = opt.seed;
  try {
    validate(cfg, g);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }

  const RunOutcome out = run(g, cfg);
  const AcyclicVerdict verdict = out.completed ? verify_acyclic(g, out.coloring) : AcyclicVerdict{};
  const Json doc{
      {"mode", "acyclic"},
      {"n", g.num_vertices()},
      {"m", g.num_edges()},
      {"delta", delta},
      {"girth", girth_json(stats.girth)},
      {"K", cfg.colors},
      {"rank_bound", cfg.rank_bound},
      {"seed", opt.seed},
      {"steps", out.steps},
      {"completed", out.completed},
      {"coloring", out.coloring},
      {"record_summary", record_summary(out.record, [](const CycleConflict& c) { return 2 * c.k - 2; })},
  };
  emit(doc.dump() + "\n", opt.output);
  if (!out.completed) {
    std::cerr << "step budget exhausted after " << out.steps << " steps\n";
    return kRejected;
  }
  if (!verdict.accepted()) {
    std::cerr << "verifier rejected the coloring: " << verdict.describe() << '\n';
    return kRejected;
  }
  return kOk;
}

int cmd_star(const StarOptions& opt) {
  const Graph g = load(opt.in);
  const GraphStats stats = compute_stats(g);
  StarConfig cfg;
  cfg.k = opt.k;
  cfg.rank_bound = opt.colors ? *opt.colors : star_color_bound(stats.delta, std::max<std::uint32_t>(opt.k, 2)).rank_bound;
  cfg.max_steps = opt.max_steps;
  cfg.source = opt.seed;
  try {
    validate(cfg, g);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }

  const StarRunOutcome out = run_star(g, cfg);
  const StarVerdict verdict = out.completed ? verify_star_k(g, out.coloring, cfg.k) : StarVerdict{};
  const Json doc{
      {"mode", "star"},
      {"k", cfg.k},
      {"n", g.num_vertices()},
      {"m", g.num_edges()},
      {"delta", stats.delta},
      {"girth", girth_json(stats.girth)},
      {"K", star_palette(cfg, g)},
      {"rank_bound", cfg.rank_bound},
      {"seed", opt.seed},
      {"steps", out.steps},
      {"completed", out.completed},
      {"coloring", out.coloring},
      {"record_summary", record_summary(out.record, [](const PathConflict& p) { return static_cast<std::uint32_t>(p.labels.size()); })},
  };
  emit(doc.dump() + "\n", opt.output);
  if (!out.completed) {
    std::cerr << "step budget exhausted after " << out.steps << " steps\n";
    return kRejected;
  }
  if (!verdict.accepted()) {
    std::cerr << "verifier rejected the coloring: " << verdict.describe() << '\n';
    return kRejected;
  }
  return kOk;
}

int cmd_bound(const BoundOptions& opt) {
  if (opt.e) {
    const auto s = solve_characteristic(parse_set(*opt.e));
    if (opt.csv) {
      std::cout << "E,tau,gamma,residual\n"
                << s.e.to_string() << ',' << fixed(s.tau, 10) << ',' << fixed(s.gamma, 10) << ',' << s.residual << '\n';
    } else {
      std::cout << "E=" << s.e.to_string() << " tau=" << fixed(s.tau) << " gamma=" << fixed(s.gamma) << '\n';
    }
    return kOk;
  }
  if (!opt.delta) throw UsageError("bound needs --delta (or --E)");
  const std::size_t delta = *opt.delta;

  if (opt.k) {
    if (*opt.k < 2) throw UsageError("--k must be at least 2");
    const auto b = star_color_bound(delta, *opt.k);
    if (opt.csv) {
      std::cout << "delta,k,exact,rank_bound,K\n"
                << delta << ',' << *opt.k << ',' << fixed(b.exact) << ',' << b.rank_bound << ',' << b.total << '\n';
    } else {
      std::cout << "rank_bound=" << b.rank_bound << " K=" << b.total << '\n';
    }
    return kOk;
  }
  if (delta < 2) throw UsageError("acyclic bounds need --delta >= 2");

  std::vector<std::optional<std::size_t>> girths;
  if (opt.girth) {
    girths.push_back(parse_girth(*opt.girth));
  } else {
    girths = {3, 7, 53, 220, std::nullopt};
  }
  if (opt.girth && !opt.csv) {
    const auto b = acyclic_color_bound(delta, girths[0]);
    std::cout << "gamma=" << fixed(b.gamma) << " K=" << b.colors << '\n';
    return kOk;
  }
  if (opt.csv) std::cout << "girth,E,tau,gamma,K\n";
  else std::printf("%-6s %-8s %-10s %-10s %s\n", "girth", "E", "tau", "gamma", "K");
  for (const auto& girth : girths) {
    const auto b = acyclic_color_bound(delta, girth);
    const std::string gs = girth ? std::to_string(*girth) : "inf";
    const std::string es = girth ? b.e.to_string() : "-";
    if (opt.csv) {
      std::cout << gs << ',' << es << ',' << fixed(b.tau) << ',' << fixed(b.gamma) << ',' << b.colors << '\n';
    } else {
      std::printf("%-6s %-8s %-10s %-10s %u\n", gs.c_str(), es.c_str(), fixed(b.tau).c_str(), fixed(b.gamma).c_str(), b.colors);
    }
  }
  return kOk;
}

int cmd_dyck(const DyckOptions& opt) {
  const DescentSet e = parse_set(opt.e);
  if (opt.enumerate) {
    try {
      for (const auto& w : enumerate_dyck(opt.t, e)) std::cout << w << '\n';
    } catch (const EnumerationLimit& err) {
      throw UsageError(err.what());
    }
    return kOk;
  }
  std::vector<BigInt> table;
  if (opt.method == "tree") table = count_dyck_table(opt.t, e);
  else if (opt.method == "lagrange") table = count_dyck_lagrange_table(opt.t, e);
  else if (opt.method == "walk") table = count_dyck_walk_table(opt.t, e);
  else throw UsageError("unknown --method '" + opt.method + "' (tree, lagrange or walk)");

  if (!opt.csv) {
    std::cout << table[opt.t] << '\n';
    return kOk;
  }
  const std::uint32_t p = e.period();
  std::cout << "t,count,ratio\n";
  for (std::uint32_t t = 0; t <= opt.t; ++t) {
    std::cout << t << ',' << table[t] << ',';
    if (t >= p && !table[t].is_zero() && !table[t - p].is_zero())
      std::cout << fixed(std::pow(ratio_to_double(table[t], table[t - p]), 1.0 / p), 9);
    std::cout << '\n';
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& opt) {
  const Graph g = load(opt.in);
  std::ifstream in(opt.coloring);
  if (!in) throw UsageError("cannot open '" + opt.coloring + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("'" + opt.coloring + "' is not valid JSON: " + e.what());
  }
  const Json& arr = doc.is_object() ? doc.value("coloring", Json()) : doc;
  if (!arr.is_array()) throw UsageError("expected a JSON array or an object with a \"coloring\" array");
  std::vector<Color> coloring;
  for (const auto& x : arr) {
    if (!x.is_number_unsigned()) throw UsageError("coloring entries must be nonnegative integers");
    coloring.push_back(x.get<Color>());
  }
  std::string mode = opt.mode.value_or(doc.is_object() ? doc.value("mode", std::string("acyclic")) : "acyclic");
  if (mode == "acyclic") {
    if (coloring.size() != g.num_edges())
      throw UsageError("coloring has " + std::to_string(coloring.size()) + " entries, graph has " +
                       std::to_string(g.num_edges()) + " edges");
    const auto v = verify_acyclic(g, coloring);
    std::cout << (v.accepted() ? "accepted" : "rejected: " + v.describe()) << '\n';
    return v.accepted() ? kOk : kRejected;
  }
  if (mode == "star") {
    const std::uint32_t k = opt.k.value_or(doc.is_object() ? doc.value("k", 2u) : 2u);
    if (k < 2) throw UsageError("--k must be at least 2");
    if (coloring.size() != g.num_vertices())
      throw UsageError("coloring has " + std::to_string(coloring.size()) + " entries, graph has " +
                       std::to_string(g.num_vertices()) + " vertices");
    const auto v = verify_star_k(g, coloring, k);
    std::cout << (v.accepted() ? "accepted" : "rejected: " + v.describe()) << '\n';
    return v.accepted() ? kOk : kRejected;
  }
  throw UsageError("unknown --mode '" + mode + "' (acyclic or star)");
}

int cmd_bench(const BenchOptions& opt) {
  const Graph g = load(opt.in);
  const std::size_t delta = g.max_degree();
  if (delta < 2) throw UsageError("bench needs a graph with max degree >= 2");
  if (opt.runs == 0) throw UsageError("--runs must be positive");
  const Color k = static_cast<Color>(4 * delta - 3);
  const auto rank = static_cast<std::uint32_t>(rank_capacity(k, delta));

  struct Row {
    std::uint64_t seed = 0;
    std::uint64_t steps = 0;
    bool completed = false;
    std::uint64_t conflicts = 0;
    std::uint32_t max_k = 0;
  };
  std::vector<Row> rows(opt.runs);
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (std::uint32_t i = next++; i < opt.runs; i = next++) {
      Row& row = rows[i];
      row.seed = opt.seed + i;
      const auto out = run(g, {.colors = k, .rank_bound = rank, .max_steps = opt.max_steps, .source = row.seed});
      row.steps = out.steps;
      row.completed = out.completed;
      for (const auto& e : out.record)
        if (e) {
          ++row.conflicts;
          row.max_k = std::max(row.max_k, e->k);
        }
    }
  };
  const unsigned threads = std::max(1u, std::min(opt.threads ? opt.threads : std::thread::hardware_concurrency(), opt.runs));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::uint64_t> steps;
  std::size_t completed = 0;
  for (const auto& r : rows) {
    steps.push_back(r.steps);
    completed += r.completed;
  }
  std::sort(steps.begin(), steps.end());
  double mean = 0;
  for (auto s : steps) mean += static_cast<double>(s);
  mean /= static_cast<double>(steps.size());
  const std::size_t mid = steps.size() / 2;
  const double median = steps.size() % 2 ? static_cast<double>(steps[mid]) : (steps[mid - 1] + steps[mid]) / 2.0;
  const double bound = expected_steps_bound(g.num_edges(), delta);
  const double rate = static_cast<double>(completed) / static_cast<double>(rows.size());

  if (opt.json) {
    Json runs = Json::array();
    for (const auto& r : rows)
      runs.push_back({{"seed", r.seed}, {"steps", r.steps}, {"completed", r.completed}, {"conflicts", r.conflicts}, {"max_k", r.max_k}});
    const Json doc{{"n", g.num_vertices()},
                   {"m", g.num_edges()},
                   {"delta", delta},
                   {"K", k},
                   {"rank_bound", rank},
                   {"runs", runs},
                   {"aggregate",
                    {{"mean_steps", mean},
                     {"median_steps", median},
                     {"completion_rate", rate},
                     {"expected_steps_bound", bound},
                     {"mean_over_bound", mean / bound}}}};
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << "seed,steps,completed,conflicts,max_k\n";
    for (const auto& r : rows)
      std::cout << r.seed << ',' << r.steps << ',' << (r.completed ? 1 : 0) << ',' << r.conflicts << ',' << r.max_k << '\n';
    std::cout << "# n=" << g.num_vertices() << " m=" << g.num_edges() << " delta=" << delta << " K=" << k
              << " rank_bound=" << rank << '\n'
              << "# mean_steps=" << fixed(mean, 3) << " median_steps=" << fixed(median, 1)
              << " completion_rate=" << fixed(rate, 4) << '\n'
              << "# expected_steps_bound=" << fixed(bound, 3) << " mean_over_bound=" << fixed(mean / bound, 6) << '\n';
  }
  return completed == rows.size() ? kOk : kRejected;
}

int cmd_generate(const GenerateOptions& opt) {
  GraphModel model;
  try {
    model = parse_graph_model(opt.model);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  const Graph g = generate_graph(
      model, {.n = opt.n, .n2 = opt.n2, .delta = opt.delta, .edges = opt.edges, .min_girth = opt.min_girth}, opt.seed);
  std::ostringstream out;
  if (parse_graph_format(opt.format) == GraphFormat::Dimacs) write_dimacs(out, g);
  else write_edge_list(out, g);
  emit(out.str(), opt.output);
  return kOk;
}

}  // namespace entcol::cli
