#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "entcol/acyclic.hpp"
#include "entcol/bounds.hpp"
#include "entcol/graph.hpp"

using namespace entcol::cli;

namespace {

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-i,--input", in.input, "Graph file")->required();
  cmd->add_option("--format", in.format, "edge-list or dimacs")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-compression acyclic edge coloring and star coloring toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "entcol 0.1.0");

  ColorOptions color;
  auto* c = app.add_subcommand("color", "Acyclic edge coloring of a graph; prints the JSON outcome");
  add_input(c, color.in);
  c->add_option("--seed", color.seed, "Seed for the rank generator")->capture_default_str();
  c->add_option("--max-steps", color.max_steps, "Step budget (0 = default)");
  auto* k_opt = c->add_option("--colors", color.colors, "Total colors K");
  auto* g_opt = c->add_option("--gamma", color.gamma, "Use K = ceil((2+gamma)(D-1))");
  k_opt->excludes(g_opt);
  c->add_option("--girth", color.girth, "Girth for the default bound instead of the measured one ('inf' for forests)")
      ->excludes(k_opt)
      ->excludes(g_opt);
  c->add_option("-o,--output", color.output, "Write JSON here instead of stdout");
  c->add_flag("--json", "JSON output (the default)");

  StarOptions star;
  auto* s = app.add_subcommand("star", "Star-k vertex coloring; prints the JSON outcome");
  add_input(s, star.in);
  s->add_option("--seed", star.seed, "Seed for the rank generator")->capture_default_str();
  s->add_option("--max-steps", star.max_steps, "Step budget (0 = default)");
  s->add_option("--k", star.k, "Forbidden 2-colored paths have 2k vertices")->capture_default_str();
  s->add_option("--colors", star.colors, "Rank bound K; the palette has K + D colors (default: the star bound)");
  s->add_option("-o,--output", star.output, "Write JSON here instead of stdout");
  s->add_flag("--json", "JSON output (the default)");

  BoundOptions bound;
  auto* b = app.add_subcommand("bound", "Color bounds and characteristic roots");
  b->add_option("--delta", bound.delta, "Maximum degree");
  b->add_option("--girth", bound.girth, "Girth (integer >= 3 or 'inf'); omit for a table");
  b->add_option("--k", bound.k, "Star-k bound instead of the acyclic one");
  b->add_option("--E", bound.e, "Solve the characteristic equation for a descent set");
  b->add_flag("--csv", bound.csv, "CSV output");

  DyckOptions dyck;
  auto* d = app.add_subcommand("dyck", "Count Dyck words with descents in E");
  d->add_option("--t", dyck.t, "Half-length t")->required();
  d->add_option("--E", dyck.e, "Descent set, e.g. {2,3}, 2N+4, N+1, {1}|2N+2")->required();
  d->add_option("--method", dyck.method, "tree, lagrange or walk")->capture_default_str();
  d->add_flag("--csv", dyck.csv, "Rows t,count,ratio for every t up to --t");
  d->add_flag("--enumerate", dyck.enumerate, "List the words instead of counting");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Check a coloring; prints the witness on rejection");
  add_input(v, verify.in);
  v->add_option("--coloring", verify.coloring, "JSON outcome or bare array")->required();
  v->add_option("--mode", verify.mode, "acyclic or star (default: from the file)");
  v->add_option("--k", verify.k, "Path parameter for star mode (default: from the file, else 2)");

  BenchOptions bench;
  auto* be = app.add_subcommand("bench", "Seeded runs with K = 4D-3 against the expected-steps bound");
  add_input(be, bench.in);
  be->add_option("--seed", bench.seed, "First seed")->capture_default_str();
  be->add_option("--runs", bench.runs, "Number of seeds")->capture_default_str();
  be->add_option("--max-steps", bench.max_steps, "Step budget per run (0 = default)");
  be->add_option("--threads", bench.threads, "Worker threads (0 = hardware concurrency)");
  be->add_flag("--json", bench.json, "JSON instead of CSV");
  be->add_flag("--csv", "CSV output (the default)");

  GenerateOptions gen;
  auto* ge = app.add_subcommand("generate", "Write a generated graph");
  ge->add_option("--model", gen.model, "random, random-girth, cycle, path, complete, complete-bipartite")
      ->capture_default_str();
  ge->add_option("--n", gen.n, "Vertices (first side for complete-bipartite)")->required();
  ge->add_option("--n2", gen.n2, "Second side for complete-bipartite");
  ge->add_option("--delta", gen.delta, "Degree cap for random models");
  ge->add_option("--edges", gen.edges, "Target edge count for random models (0 = n*delta/2)");
  ge->add_option("--min-girth", gen.min_girth, "Minimum girth for random-girth")->capture_default_str();
  ge->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  ge->add_option("--format", gen.format, "edge-list or dimacs")->capture_default_str();
  ge->add_option("-o,--output", gen.output, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*c) return cmd_color(color);
    if (*s) return cmd_star(star);
    if (*b) return cmd_bound(bound);
    if (*d) return cmd_dyck(dyck);
    if (*v) return cmd_verify(verify);
    if (*be) return cmd_bench(bench);
    if (*ge) return cmd_generate(gen);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const entcol::ParseError& e) {
    std::cerr << "error: line " << e.line() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const entcol::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const entcol::InadmissibleSet& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
