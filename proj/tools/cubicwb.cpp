// Command-line workbench for perfect-matching structure in bridgeless cubic
// graphs: invariants, conjecture witness searches, bound checkers, and the
// traceable-graph construction. Output is JSON lines, one object per graph.
//
// Exit codes: 0 all checks passed, 2 a witness search failed, 3 a resource
// cap was hit, 4 bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubic/catalog.hpp"
#include "cubic/graph6.hpp"
#include "cubic/report.hpp"
#include "cubic/sweep.hpp"

namespace {

using namespace cubic;

struct GraphSelection {
  std::string gen_spec;   // e.g. "petersen" or "prism:4" or "random_bridgeless:12,7"
  std::string g6;         // a single graph6 line
  std::string catalog;    // path to a graph6 file
  std::string builtin;    // "named" or "acceptance"
};

void add_selection(CLI::App* cmd, GraphSelection& sel) {
  cmd->add_option("--gen", sel.gen_spec, "generator spec, e.g. petersen or prism:4");
  cmd->add_option("--g6", sel.g6, "a graph6 line");
  cmd->add_option("--catalog", sel.catalog, "graph6 file, one graph per line");
  cmd->add_option("--builtin", sel.builtin, "built-in catalog: named or acceptance");
}

CubicGraph graph_from_spec(const std::string& spec, std::uint64_t seed) {
  std::string name = spec;
  std::vector<long long> params;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) params.push_back(std::stoll(tok));
  }
  if (name == "random_bridgeless" && params.size() == 1) params.push_back((long long)seed);
  return generate(name, params);
}

std::vector<CatalogEntry> resolve(const GraphSelection& sel, std::uint64_t seed) {
  if (!sel.gen_spec.empty())
    return {{sel.gen_spec, sel.gen_spec, graph_from_spec(sel.gen_spec, seed)}};
  if (!sel.g6.empty()) return {{"g6_1", "graph6 argument", parse_graph6(sel.g6)}};
  if (!sel.catalog.empty()) return catalog_from_graph6(sel.catalog);
  if (sel.builtin == "named") return named_catalog();
  if (sel.builtin == "acceptance") return acceptance_catalog();
  throw error(errc::bad_params, "select graphs with --gen, --g6, --catalog or --builtin");
}

int emit(const SweepResult& result, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << result.jsonl;
  } else {
    std::ofstream out(out_path);
    if (!out) throw error(errc::bad_params, "cannot write " + out_path);
    out << result.jsonl;
  }
  return int(result.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for perfect matchings in bridgeless cubic graphs"};
  app.require_subcommand(1);

  CheckOptions opts;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out_path;
  app.add_option("--cap-matchings", opts.cap_matchings, "matching enumeration cap");
  app.add_option("--cap-oddsets", opts.cap_oddsets, "odd-set enumeration vertex cap");
  app.add_option("--cap-nodes", opts.cap_nodes, "search node budget");
  app.add_option("--cap-cycles", opts.cap_cycles, "cycle enumeration cap");
  app.add_option("--seed", seed, "seed for random generators");
  app.add_option("--jobs", jobs, "worker threads for sweeps");
  app.add_option("--out", out_path, "write JSON lines here instead of stdout");
  app.add_flag("--timings", opts.timings, "include elapsed_ms in reports");

  GraphSelection sel_inv, sel_check, sel_con, sel_sweep;

  auto* inv = app.add_subcommand("invariants", "order, bridges, chromatic index, oddness, ...");
  add_selection(inv, sel_inv);

  auto* chk = app.add_subcommand("check", "run a witness search or theorem checker");
  std::string kind;
  chk->add_option("kind", kind, "ms | kr | fr | thm1 | thm3 | thm45")->required();
  add_selection(chk, sel_check);

  auto* con = app.add_subcommand("construct", "run a construction");
  std::string target;
  con->add_option("target", target, "traceable")->required();
  add_selection(con, sel_con);

  auto* gen = app.add_subcommand("gen", "emit graphs as graph6");
  std::string gen_spec;
  gen->add_option("spec", gen_spec, "generator spec, e.g. flower_snark:5")->required();

  auto* swp = app.add_subcommand("sweep", "run every check over a catalog");
  std::string what = "all";
  swp->add_option("--checks", what, "all | invariants | ms | kr | fr | thm1 | thm3 | thm45 | traceable");
  add_selection(swp, sel_sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) {
      return emit(run_sweep(resolve(sel_inv, seed), "invariants", opts, jobs), out_path);
    }
    if (chk->parsed()) {
      return emit(run_sweep(resolve(sel_check, seed), kind, opts, jobs), out_path);
    }
    if (con->parsed()) {
      if (target != "traceable") throw error(errc::bad_params, "unknown construction '" + target + "'");
      return emit(run_sweep(resolve(sel_con, seed), "traceable", opts, jobs), out_path);
    }
    if (gen->parsed()) {
      CubicGraph g = graph_from_spec(gen_spec, seed);
      std::string line = write_graph6(g) + "\n";
      if (out_path.empty())
        std::cout << line;
      else {
        std::ofstream out(out_path);
        out << line;
      }
      return 0;
    }
    if (swp->parsed()) {
      return emit(run_sweep(resolve(sel_sweep, seed), what, opts, jobs), out_path);
    }
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case errc::resource_cap:
      case errc::too_large:
        return 3;
      default:
        return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }
  return 0;
}
