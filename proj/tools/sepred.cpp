// sepred: constrained separation, bipartization and cardinality-constrained
// homomorphism solvers over treewidth-reduced graphs.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "cliutil.hpp"
#include "sepred/bipartization.hpp"
#include "sepred/cutsolvers.hpp"
#include "sepred/flow.hpp"
#include "sepred/graphio.hpp"
#include "sepred/oracle.hpp"
#include "sepred/tdecomp.hpp"
#include "sepred/torso.hpp"
#include "sepred/twreduce.hpp"

namespace {

using sepred::cli::json;
using namespace sepred;

struct Common {
  std::string graph_path;
  int k = 0;
  int s = 0, t = 0;  // 1-based on the CLI
  std::string pairs_path;
  std::string class_spec = "all";
  std::string target_path;
  std::string emit_td;
  uint64_t seed = 0;
  bool oracle = false;
  int threads = 1;  // reserved; solvers run sequentially
};

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

json stats_json(const PipelineStats& ps, long wall_ms) {
  json st;
  st["reduced_vertices"] = ps.reduced_vertices;
  st["decomposition_width"] = ps.decomposition_width;
  st["dp_states"] = ps.dp_states;
  st["wall_ms"] = wall_ms;
  return st;
}

json result_json(const std::optional<VertexSet>& sol, const PipelineStats& ps,
                 long wall_ms, json certificate = json::object()) {
  json out;
  out["status"] = sol ? "feasible" : "infeasible";
  out["solution"] =
      sol ? sepred::cli::vertex_set_json(*sol) : json::array();
  out["size"] = sol ? json(static_cast<int>(sol->size())) : json(nullptr);
  out["certificate"] = std::move(certificate);
  out["stats"] = stats_json(ps, wall_ms);
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

ColoredGraph load_graph(const Common& c) {
  ColoredGraph g = read_graph_file(c.graph_path);
  if (!c.emit_td.empty()) {
    std::ofstream out(c.emit_td);
    if (!out)
      throw std::invalid_argument("cannot write td file: " + c.emit_td);
    write_td(out, decompose(g), g.n());
  }
  return g;
}

void check_st(const ColoredGraph& g, const Common& c) {
  if (c.s < 1 || c.s > g.n() || c.t < 1 || c.t > g.n())
    throw std::invalid_argument("s or t out of range");
}

// oracle comparison outcome: 0 match, 4 mismatch
int compare_with_oracle(json& out, const std::optional<VertexSet>& got,
                        const std::optional<int>& oracle_size) {
  json ocheck;
  ocheck["feasible"] = oracle_size.has_value();
  ocheck["size"] = oracle_size ? json(*oracle_size) : json(nullptr);
  bool match = got.has_value() == oracle_size.has_value() &&
               (!got || static_cast<int>(got->size()) == *oracle_size);
  ocheck["match"] = match;
  out["oracle"] = ocheck;
  return match ? 0 : 4;
}

template <typename F>
std::optional<int> oracle_size_of(json& out, F&& run) {
  try {
    auto res = run();
    if (!res) return std::nullopt;
    return static_cast<int>(res->size());
  } catch (const std::invalid_argument& e) {
    out["oracle"] = {{"skipped", e.what()}};
    throw;
  }
}

// ---- subcommand runners -------------------------------------------------

int run_mincut(const Common& c) {
  ColoredGraph g = load_graph(c);
  check_st(g, c);
  Timer timer;
  auto cut = min_vertex_cut(g, c.s - 1, c.t - 1, c.k);
  PipelineStats ps;
  json cert;
  std::optional<VertexSet> sol;
  if (cut) {
    sol = cut->second;
    cert["ell"] = cut->first;
  }
  emit(result_json(sol, ps, timer.ms(), cert));
  return 0;
}

int run_chain(const Common& c) {
  ColoredGraph g = load_graph(c);
  check_st(g, c);
  Timer timer;
  SeparatorChain chain = separator_chain(g, c.s - 1, c.t - 1);
  json cert;
  cert["ell"] = chain.ell;
  cert["diffs"] = json::array();
  for (const auto& d : chain.diffs)
    cert["diffs"].push_back(sepred::cli::vertex_set_json(d));
  cert["separators"] = json::array();
  VertexSet all;
  for (const auto& s : chain.separators) {
    cert["separators"].push_back(sepred::cli::vertex_set_json(s));
    all = vset::unite(all, s);
  }
  PipelineStats ps;
  emit(result_json(all, ps, timer.ms(), cert));
  return 0;
}

int run_torso(const Common& c, const std::string& set_csv) {
  ColoredGraph g = load_graph(c);
  VertexSet keep;
  {
    std::istringstream ss(set_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      int v = std::stoi(tok);
      if (v < 1 || v > g.n())
        throw std::invalid_argument("torso set id out of range");
      keep.push_back(v - 1);
    }
    keep = vset::sorted_unique(std::move(keep));
  }
  Timer timer;
  TorsoResult tr = torso(g, keep);
  json cert;
  cert["n"] = tr.graph.n();
  cert["origin"] = sepred::cli::vertex_set_json(tr.origin);
  cert["edges"] = json::array();
  for (const auto& [u, v, color] : tr.graph.edges())
    cert["edges"].push_back(
        {u + 1, v + 1, color == EdgeColor::Red ? "red" : "black"});
  PipelineStats ps;
  emit(result_json(tr.origin, ps, timer.ms(), cert));
  return 0;
}

int run_reduce(const Common& c, const std::string& terminals_csv,
               const std::string& out_path, const std::string& sidecar_path) {
  ColoredGraph g = load_graph(c);
  VertexSet terminals;
  if (!terminals_csv.empty()) {
    std::istringstream ss(terminals_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      int v = std::stoi(tok);
      if (v < 1 || v > g.n())
        throw std::invalid_argument("terminal id out of range");
      terminals.push_back(v - 1);
    }
    terminals = vset::sorted_unique(std::move(terminals));
  } else {
    check_st(g, c);
    terminals = vset::sorted_unique({c.s - 1, c.t - 1});
  }
  Timer timer;
  ReductionResult rr = reduce_terminals(g, terminals, c.k);
  std::string text = format_graph(rr.reduced);
  json origin = json::array();
  for (int v : rr.origin_map)
    origin.push_back(v == kSubdivision ? json(nullptr) : json(v + 1));
  json sidecar;
  sidecar["origin_map"] = origin;
  sidecar["cover"] = sepred::cli::vertex_set_json(rr.cover);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write: " + out_path);
    out << text;
  }
  if (!sidecar_path.empty()) {
    std::ofstream out(sidecar_path);
    if (!out) throw std::invalid_argument("cannot write: " + sidecar_path);
    out << sidecar.dump(2) << '\n';
  }
  json cert = sidecar;
  cert["graph"] = text;
  PipelineStats ps;
  ps.reduced_vertices = rr.reduced.n();
  emit(result_json(rr.cover, ps, timer.ms(), cert));
  return 0;
}

int run_separator_solver(const Common& c, const std::string& which) {
  ColoredGraph g = load_graph(c);
  check_st(g, c);
  int s = c.s - 1, t = c.t - 1;
  Timer timer;
  PipelineStats ps;
  std::optional<VertexSet> sol;
  ConstraintSpec spec = ConstraintSpec::any();
  if (which == "stable-cut") {
    sol = stable_cut(g, s, t, c.k, &ps);
    spec = ConstraintSpec::edgeless(c.k);
  } else if (which == "hereditary-cut") {
    spec = sepred::cli::load_class(c.class_spec, c.k).compiled;
    sol = g_mincut(g, s, t, c.k, spec, &ps);
  } else if (which == "connected-cut") {
    sol = connected_cut(g, s, t, c.k, &ps);
    spec = ConstraintSpec::connected_black();
  }
  json out = result_json(sol, ps, timer.ms());
  int code = 0;
  if (c.oracle) {
    try {
      SeparationDemand demand;
      demand.cut_pairs.push_back({{s}, {t}});
      auto osize = oracle_size_of(out, [&] {
        return oracle::brute_constrained_cut(
            g, demand, c.k, spec, vset::sorted_unique({s, t}));
      });
      code = compare_with_oracle(out, sol, osize);
    } catch (const std::invalid_argument&) {
      // oracle skipped: instance too large
    }
  }
  emit(out);
  return code;
}

int run_eivc(const Common& c) {
  ColoredGraph g = load_graph(c);
  check_st(g, c);
  Timer timer;
  PipelineStats ps;
  auto res = edge_induced_vertex_cut(g, c.s - 1, c.t - 1, c.k, &ps);
  json cert;
  std::optional<VertexSet> sol;
  if (res) {
    sol = res->separator;
    cert["cover"] = sepred::cli::edge_list_json(res->cover);
  }
  json out = result_json(sol, ps, timer.ms(), cert);
  int code = 0;
  if (c.oracle) {
    try {
      auto ores = oracle::brute_edge_induced_cut(g, c.s - 1, c.t - 1, c.k);
      json ocheck;
      ocheck["feasible"] = ores.has_value();
      bool match = ores.has_value() == res.has_value();
      ocheck["match"] = match;
      out["oracle"] = ocheck;
      if (!match) code = 4;
    } catch (const std::invalid_argument& e) {
      out["oracle"] = {{"skipped", e.what()}};
    }
  }
  emit(out);
  return code;
}

int run_multicut(const Common& c) {
  ColoredGraph g = load_graph(c);
  auto pairs = sepred::cli::load_pairs(c.pairs_path, g.n());
  auto cls = sepred::cli::load_class(c.class_spec, c.k);
  Timer timer;
  PipelineStats ps;
  auto sol =
      multicut_uncut(g, pairs.cut_pairs, pairs.uncut_pairs, c.k, cls.compiled,
                     &ps);
  json out = result_json(sol, ps, timer.ms());
  int code = 0;
  if (c.oracle) {
    try {
      SeparationDemand demand{pairs.cut_pairs, pairs.uncut_pairs};
      auto osize = oracle_size_of(out, [&] {
        return oracle::brute_constrained_cut(g, demand, c.k, cls.compiled, {});
      });
      code = compare_with_oracle(out, sol, osize);
    } catch (const std::invalid_argument&) {
    }
  }
  emit(out);
  return code;
}

int run_bipartize(const Common& c, const std::string& which) {
  ColoredGraph g = load_graph(c);
  Timer timer;
  PipelineStats ps;
  std::optional<VertexSet> sol;
  sepred::cli::ClassSpec cls;
  bool exact = false;
  if (which == "bipartize") {
    cls = sepred::cli::load_class(c.class_spec, c.k);
    sol = g_bipartization(g, c.k, cls.compiled, &ps);
  } else if (which == "stable-bipartize") {
    cls = sepred::cli::load_class("edgeless", c.k);
    sol = g_bipartization(g, c.k, cls.compiled, &ps);
  } else {  // exact-stable-bipartize
    cls = sepred::cli::load_class("edgeless", c.k);
    exact = true;
    sol = exact_stable_bipartization(g, c.k, &ps);
  }
  json out = result_json(sol, ps, timer.ms());
  int code = 0;
  if (c.oracle) {
    try {
      auto osize = oracle_size_of(out, [&] {
        return oracle::brute_bipartization(g, c.k, cls.predicate, exact);
      });
      code = compare_with_oracle(out, sol, osize);
    } catch (const std::invalid_argument&) {
    }
  }
  emit(out);
  return code;
}

int run_edge_bipartize(const Common& c) {
  ColoredGraph g = load_graph(c);
  auto cls = sepred::cli::load_class(c.class_spec, 2 * c.k);
  Timer timer;
  PipelineStats ps;
  auto res = g_edge_bipartization(g, c.k, cls.predicate, &ps);
  json cert;
  std::optional<VertexSet> endpoints;
  if (res) {
    cert["edges"] = sepred::cli::edge_list_json(*res);
    VertexSet ep;
    for (const auto& [u, v] : *res) {
      vset::insert(ep, u);
      vset::insert(ep, v);
    }
    endpoints = ep;
  }
  json out;
  out["status"] = res ? "feasible" : "infeasible";
  out["solution"] = res ? cert["edges"] : json::array();
  out["size"] = res ? json(static_cast<int>(res->size())) : json(nullptr);
  out["certificate"] = cert;
  out["stats"] = stats_json(ps, timer.ms());
  emit(out);
  return 0;
}

int run_contract(const Common& c) {
  ColoredGraph g = load_graph(c);
  Timer timer;
  PipelineStats ps;
  auto res = bipartite_contraction(g, c.k, &ps);
  json cert;
  if (res) cert["contract"] = sepred::cli::edge_list_json(*res);
  json out;
  out["status"] = res ? "feasible" : "infeasible";
  out["solution"] = res ? sepred::cli::edge_list_json(*res) : json::array();
  out["size"] = res ? json(static_cast<int>(res->size())) : json(nullptr);
  out["certificate"] = cert;
  out["stats"] = stats_json(ps, timer.ms());
  int code = 0;
  if (c.oracle) {
    try {
      auto ores = oracle::brute_contraction(g, c.k);
      json ocheck;
      ocheck["feasible"] = ores.has_value();
      ocheck["size"] = ores ? json(static_cast<int>(ores->size())) : json(nullptr);
      bool match = ores.has_value() == res.has_value() &&
                   (!res || res->size() == ores->size());
      ocheck["match"] = match;
      out["oracle"] = ocheck;
      if (!match) code = 4;
    } catch (const std::invalid_argument& e) {
      out["oracle"] = {{"skipped", e.what()}};
    }
  }
  emit(out);
  return code;
}

int run_hck(const Common& c) {
  ColoredGraph g = load_graph(c);
  auto inst = sepred::cli::load_hck_target(c.target_path, g.n());
  Timer timer;
  PipelineStats ps;
  auto res = hck_solve(g, inst.target, inst.lists);
  json cert;
  std::optional<VertexSet> sol;
  if (res) {
    json theta = json::array();
    for (int v : res->theta) theta.push_back(v + 1);
    cert["theta"] = theta;
    cert["exceptional"] = sepred::cli::vertex_set_json(res->exceptional);
    sol = res->exceptional;
  }
  json out = result_json(sol, ps, timer.ms(), cert);
  if (res) out["size"] = static_cast<int>(res->exceptional.size());
  int code = 0;
  if (c.oracle) {
    try {
      auto ores = oracle::brute_hck(g, inst.target, inst.lists);
      json ocheck;
      ocheck["feasible"] = ores.has_value();
      bool match = ores.has_value() == res.has_value();
      ocheck["match"] = match;
      out["oracle"] = ocheck;
      if (!match) code = 4;
    } catch (const std::invalid_argument& e) {
      out["oracle"] = {{"skipped", e.what()}};
    }
  }
  emit(out);
  return code;
}

int run_gen(int n, int m, double p, bool use_p, uint64_t seed,
            const std::string& out_path) {
  ColoredGraph g = sepred::cli::gen_graph(n, m, p, use_p, seed);
  if (out_path.empty()) {
    write_graph(std::cout, g);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write: " + out_path);
    write_graph(out, g);
  }
  return 0;
}

void add_common(CLI::App* cmd, Common& c, bool needs_graph = true,
                bool has_k = true, bool has_st = false) {
  if (needs_graph)
    cmd->add_option("--graph", c.graph_path, "input graph file")->required();
  if (has_k) cmd->add_option("--k", c.k, "solution size bound")->required();
  if (has_st) {
    cmd->add_option("--s", c.s, "source terminal (1-based)")->required();
    cmd->add_option("--t", c.t, "sink terminal (1-based)")->required();
  }
  cmd->add_option("--seed", c.seed, "rng seed (gen/verify)");
  cmd->add_flag("--oracle", c.oracle,
                "cross-check against the brute-force oracle");
  cmd->add_option("--threads", c.threads,
                  "worker threads (reserved; solvers run sequentially)");
  cmd->add_option("--emit-td", c.emit_td,
                  "write a min-fill tree decomposition of the input graph");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constrained separation solvers via treewidth reduction"};
  app.require_subcommand(1);

  Common c;
  std::string torso_set, terminals_csv, out_path, sidecar_path;
  int gen_n = 0, gen_m = 0;
  double gen_p = 0.0;
  std::string verify_solver;

  auto* mincut = app.add_subcommand("mincut", "minimum s-t vertex cut");
  add_common(mincut, c, true, true, true);

  auto* chain = app.add_subcommand("chain", "noncrossing minimum separator chain");
  add_common(chain, c, true, false, true);

  auto* torso_cmd = app.add_subcommand("torso", "torso of the graph on a vertex set");
  add_common(torso_cmd, c, true, false, false);
  torso_cmd->add_option("--set", torso_set, "comma-separated 1-based ids")
      ->required();

  auto* reduce = app.add_subcommand("reduce", "treewidth reduction G*");
  add_common(reduce, c, true, true, false);
  reduce->add_option("--s", c.s, "source terminal (1-based)");
  reduce->add_option("--t", c.t, "sink terminal (1-based)");
  reduce->add_option("--terminals", terminals_csv, "comma-separated terminals");
  reduce->add_option("--out", out_path, "write G* as graph text");
  reduce->add_option("--sidecar", sidecar_path, "write origin_map/cover JSON");

  auto* stable = app.add_subcommand("stable-cut", "independent s-t separator");
  add_common(stable, c, true, true, true);

  auto* hcut = app.add_subcommand("hereditary-cut", "class-constrained s-t separator");
  add_common(hcut, c, true, true, true);
  hcut->add_option("--class", c.class_spec, "builtin name or member file")
      ->required();

  auto* eivc = app.add_subcommand("eivc", "edge-induced vertex cut");
  add_common(eivc, c, true, true, true);

  auto* conn = app.add_subcommand("connected-cut", "connected s-t separator");
  add_common(conn, c, true, true, true);

  auto* multicut = app.add_subcommand("multicut", "set multicut-uncut");
  add_common(multicut, c, true, true, false);
  multicut->add_option("--pairs", c.pairs_path, "cut/uncut pairs file")
      ->required();
  multicut->add_option("--class", c.class_spec, "builtin name or member file");

  auto* bip = app.add_subcommand("bipartize", "class-constrained bipartization");
  add_common(bip, c, true, true, false);
  bip->add_option("--class", c.class_spec, "builtin name or member file")
      ->required();

  auto* sbip = app.add_subcommand("stable-bipartize", "independent bipartization");
  add_common(sbip, c, true, true, false);

  auto* esbip = app.add_subcommand("exact-stable-bipartize",
                                   "independent bipartization of size exactly k");
  add_common(esbip, c, true, true, false);

  auto* ebip = app.add_subcommand("edge-bipartize", "class-constrained edge bipartization");
  add_common(ebip, c, true, true, false);
  ebip->add_option("--class", c.class_spec, "subgraph-closed builtin or file")
      ->required();

  auto* contract = app.add_subcommand("contract-bipartite",
                                      "bipartization by edge contraction");
  add_common(contract, c, true, true, false);

  auto* hck_cmd = app.add_subcommand("hck", "list (H,C,<=K)-coloring");
  add_common(hck_cmd, c, true, false, false);
  hck_cmd->add_option("--target", c.target_path, "target JSON file")
      ->required();

  auto* gen = app.add_subcommand("gen", "random instance generator");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--m", gen_m, "edge count");
  auto* popt = gen->add_option("--p", gen_p, "edge probability");
  gen->add_option("--seed", c.seed, "rng seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand(
      "verify", "run a solver and its oracle, exit 4 on mismatch");
  verify->add_option("solver", verify_solver,
                     "stable-cut|hereditary-cut|eivc|connected-cut|multicut|"
                     "bipartize|stable-bipartize|exact-stable-bipartize|"
                     "contract-bipartite|hck")
      ->required();
  add_common(verify, c, true, true, false);
  verify->add_option("--s", c.s, "source terminal (1-based)");
  verify->add_option("--t", c.t, "sink terminal (1-based)");
  verify->add_option("--pairs", c.pairs_path, "cut/uncut pairs file");
  verify->add_option("--class", c.class_spec, "builtin name or member file");
  verify->add_option("--target", c.target_path, "hck target JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*mincut) return run_mincut(c);
    if (*chain) return run_chain(c);
    if (*torso_cmd) return run_torso(c, torso_set);
    if (*reduce) return run_reduce(c, terminals_csv, out_path, sidecar_path);
    if (*stable) return run_separator_solver(c, "stable-cut");
    if (*hcut) return run_separator_solver(c, "hereditary-cut");
    if (*eivc) return run_eivc(c);
    if (*conn) return run_separator_solver(c, "connected-cut");
    if (*multicut) return run_multicut(c);
    if (*bip) return run_bipartize(c, "bipartize");
    if (*sbip) return run_bipartize(c, "stable-bipartize");
    if (*esbip) return run_bipartize(c, "exact-stable-bipartize");
    if (*ebip) return run_edge_bipartize(c);
    if (*contract) return run_contract(c);
    if (*hck_cmd) return run_hck(c);
    if (*gen) return run_gen(gen_n, gen_m, gen_p, popt->count() > 0, c.seed,
                             out_path);
    if (*verify) {
      c.oracle = true;
      if (verify_solver == "stable-cut" || verify_solver == "hereditary-cut" ||
          verify_solver == "connected-cut")
        return run_separator_solver(c, verify_solver);
      if (verify_solver == "eivc") return run_eivc(c);
      if (verify_solver == "multicut") return run_multicut(c);
      if (verify_solver == "bipartize" || verify_solver == "stable-bipartize" ||
          verify_solver == "exact-stable-bipartize")
        return run_bipartize(c, verify_solver);
      if (verify_solver == "contract-bipartite") return run_contract(c);
      if (verify_solver == "hck") return run_hck(c);
      throw std::invalid_argument("unknown solver: " + verify_solver);
    }
  } catch (const std::invalid_argument& e) {
    json err;
    err["status"] = "error";
    err["message"] = e.what();
    emit(err);
    return 3;
  }
  return 0;
}
