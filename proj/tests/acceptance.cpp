// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. argv[1] is the path of the CLI binary (used by the
// determinism criterion).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cliutil.hpp"
#include "sepred/bipartization.hpp"
#include "sepred/cutsolvers.hpp"
#include "sepred/flow.hpp"
#include "sepred/graphio.hpp"
#include "sepred/hck.hpp"
#include "sepred/oracle.hpp"
#include "sepred/tdecomp.hpp"
#include "sepred/torso.hpp"
#include "sepred/twreduce.hpp"
#include "test_support.hpp"

using namespace sepred;
using namespace sepred::testing;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

std::string g_cli_path;

// ---- criterion 1: hypercube minimum cuts ---------------------------------

void criterion_hypercube() {
  auto start = std::chrono::steady_clock::now();
  for (int dim : {3, 4, 5}) {
    ColoredGraph g = hypercube(dim);
    int t = (1 << dim) - 1;
    auto cut = min_vertex_cut(g, 0, t, dim);
    require(cut.has_value(), "cube cut not found");
    require(cut->first == dim, "cube cut size differs from the dimension");
    auto below = min_vertex_cut(g, 0, t, dim - 1);
    require(!below.has_value(), "a smaller cube cut should not exist");
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  require(ms < 1000, "hypercube checks exceeded one second");
}

// ---- criterion 2: chain coverage ------------------------------------------

void criterion_chain_coverage() {
  std::mt19937_64 rng(20111);
  int done = 0;
  while (done < 500) {
    int n = 4 + static_cast<int>(rng() % 7);  // up to 10
    ColoredGraph g = random_graph(n, 0.3, rng);
    if (g.has_edge(0, 1)) continue;
    auto cut = min_vertex_cut(g, 0, 1, n);
    if (!cut || cut->first == 0) continue;
    ++done;
    SeparatorChain chain = separator_chain(g, 0, 1);
    VertexSet covered;
    for (const auto& s : chain.separators) {
      require(static_cast<int>(s.size()) == chain.ell,
              "separator size differs from ell");
      covered = vset::unite(covered, s);
    }
    // every minimum separator is inside the union
    VertexSet universe;
    for (int v = 2; v < n; ++v) universe.push_back(v);
    std::vector<int> idx(chain.ell);
    std::function<void(int, VertexSet&)> rec = [&](int start, VertexSet& acc) {
      if (static_cast<int>(acc.size()) == chain.ell) {
        if (is_separator(g, acc, {0}, {1}))
          require(vset::is_subset(acc, covered),
                  "minimum separator escapes the chain");
        return;
      }
      for (int i = start; i < static_cast<int>(universe.size()); ++i) {
        acc.push_back(universe[i]);
        rec(i + 1, acc);
        acc.pop_back();
      }
    };
    VertexSet acc;
    rec(0, acc);
  }
}

// ---- criterion 3: torso algebra --------------------------------------------

void criterion_torso_algebra() {
  std::mt19937_64 rng(20112);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 5);  // up to 7
    ColoredGraph g = random_graph(n, 0.4, rng);
    VertexSet c2, c1;
    for (int v = 0; v < n; ++v)
      if (rng() % 4 != 0) c2.push_back(v);
    for (int v : c2)
      if (rng() % 4 != 0) c1.push_back(v);

    // composition
    auto t2 = torso(g, c2);
    VertexSet c1_local;
    for (size_t i = 0; i < t2.origin.size(); ++i)
      if (vset::contains(c1, t2.origin[i]))
        c1_local.push_back(static_cast<int>(i));
    auto composed = torso(t2.graph, c1_local);
    auto direct = torso(g, c1);
    require(composed.graph.edges() == direct.graph.edges() &&
                composed.graph.n() == direct.graph.n(),
            "torso composition failed");

    // subgraph property
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (rng() % 4 == 0) s.push_back(v);
    VertexSet rest;
    for (int v = 0; v < n; ++v)
      if (!vset::contains(s, v)) rest.push_back(v);
    auto gs = induced_subgraph(g, rest);
    VertexSet c2m;
    for (size_t i = 0; i < gs.origin.size(); ++i)
      if (vset::contains(c2, gs.origin[i]))
        c2m.push_back(static_cast<int>(i));
    auto left = torso(gs.graph, c2m);
    std::vector<int> t2_local(g.n(), -1);
    for (size_t i = 0; i < t2.origin.size(); ++i)
      t2_local[t2.origin[i]] = static_cast<int>(i);
    for (const auto& [u, v, color] : left.graph.edges()) {
      (void)color;
      int ou = gs.origin[left.origin[u]], ov = gs.origin[left.origin[v]];
      require(t2.graph.has_edge(t2_local[ou], t2_local[ov]),
              "torso subgraph property failed");
    }

    // separator preservation for S inside C1 (size <= 3)
    if (c1.size() >= 2) {
      auto t1 = torso(g, c1);
      std::vector<int> t1_local(g.n(), -1);
      for (size_t i = 0; i < t1.origin.size(); ++i)
        t1_local[t1.origin[i]] = static_cast<int>(i);
      for (int trial = 0; trial < 8; ++trial) {
        VertexSet sep;
        for (int v : c1)
          if (rng() % 3 == 0 && sep.size() < 3) sep.push_back(v);
        int a = c1[rng() % c1.size()], b = c1[rng() % c1.size()];
        if (a == b) continue;
        VertexSet sep_local;
        for (int v : sep) sep_local.push_back(t1_local[v]);
        bool in_torso =
            is_separator(t1.graph, sep_local, {t1_local[a]}, {t1_local[b]});
        bool in_g = is_separator(g, sep, {a}, {b});
        require(in_torso == in_g, "torso separator preservation failed");
      }
    }
  }
}

// ---- criterion 4: reduction coverage ---------------------------------------

void criterion_reduction_coverage() {
  std::mt19937_64 rng(20113);
  int done = 0;
  while (done < 500) {
    int n = 4 + static_cast<int>(rng() % 7);  // up to 10
    ColoredGraph g = random_graph(n, 0.3, rng);
    int k = 1 + static_cast<int>(rng() % 4);
    if (g.has_edge(0, 1)) continue;
    if (!min_vertex_cut(g, 0, 1, k)) continue;
    ++done;
    auto cover = cover_minimal_separators(g, 0, 1, k);
    auto brute = oracle::brute_minimal_separator_union(g, 0, 1, k);
    require(vset::is_subset(brute, cover),
            "minimal separator union escapes the cover");
  }

  // Thm 2.15 (2) and (4) by enumeration
  int checked = 0;
  while (checked < 150) {
    int n = 4 + static_cast<int>(rng() % 6);  // up to 9
    ColoredGraph g = random_graph(n, 0.3, rng);
    int k = 1 + static_cast<int>(rng() % 3);
    if (g.has_edge(0, 1)) continue;
    if (!min_vertex_cut(g, 0, 1, k)) continue;
    ++checked;
    ReductionResult rr = reduce_terminals(g, {0, 1}, k);
    // (4): retained adjacency identical
    for (size_t u = 0; u < rr.origin_map.size(); ++u)
      for (size_t v = u + 1; v < rr.origin_map.size(); ++v) {
        int ou = rr.origin_map[u], ov = rr.origin_map[v];
        if (ou == kSubdivision || ov == kSubdivision) continue;
        require(rr.reduced.has_edge(static_cast<int>(u),
                                    static_cast<int>(v)) ==
                    g.has_edge(ou, ov),
                "retained edges differ");
      }
    // (2): minimal separators of size <= k coincide
    auto minimal_seps = [&](const ColoredGraph& h, int s, int t) {
      std::vector<VertexSet> out;
      VertexSet universe;
      for (int v = 0; v < h.n(); ++v)
        if (v != s && v != t) universe.push_back(v);
      std::function<void(int, VertexSet&)> rec = [&](int start,
                                                     VertexSet& acc) {
        if (!acc.empty() && static_cast<int>(acc.size()) <= k &&
            is_separator(h, acc, {s}, {t})) {
          bool minimal = true;
          for (int v : acc)
            if (is_separator(h, vset::difference(acc, {v}), {s}, {t}))
              minimal = false;
          if (minimal) out.push_back(acc);
          if (minimal) return;  // supersets are not minimal
        }
        if (static_cast<int>(acc.size()) == k) return;
        for (int i = start; i < static_cast<int>(universe.size()); ++i) {
          acc.push_back(universe[i]);
          rec(i + 1, acc);
          acc.pop_back();
        }
      };
      VertexSet acc;
      rec(0, acc);
      std::sort(out.begin(), out.end());
      return out;
    };
    // empty set separates when already disconnected; both sides then agree
    auto in_g = minimal_seps(g, 0, 1);
    auto in_r = minimal_seps(rr.reduced, rr.reduced_id(0), rr.reduced_id(1));
    std::vector<VertexSet> mapped;
    for (const auto& sep : in_r) {
      VertexSet m;
      for (int v : sep) {
        require(rr.origin_map[v] != kSubdivision,
                "a minimal separator touched a subdivision vertex");
        m.push_back(rr.origin_map[v]);
      }
      mapped.push_back(vset::sorted_unique(std::move(m)));
    }
    std::sort(mapped.begin(), mapped.end());
    require(in_g == mapped, "minimal separators differ after reduction");
  }
}

// ---- criterion 5: width stability ------------------------------------------

// core on vertices 2..n-1 with 2n random edges; terminals 0 and 1 attached
// to three random core vertices each, so the minimum cut stays at most 3
ColoredGraph width_family_instance(int n, std::mt19937_64& rng) {
  ColoredGraph g(n);
  int m = 2 * n;
  int guard = 0;
  while (g.edge_count() < m && ++guard < 100000) {
    int u = 2 + static_cast<int>(rng() % (n - 2));
    int v = 2 + static_cast<int>(rng() % (n - 2));
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
  }
  for (int term : {0, 1}) {
    int attached = 0;
    while (attached < 3) {
      int v = 2 + static_cast<int>(rng() % (n - 2));
      if (g.has_edge(term, v)) continue;
      g.add_edge(term, v);
      ++attached;
    }
  }
  return g;
}

void criterion_width_stability() {
  std::mt19937_64 rng(20114);
  const int k = 3;
  auto batch_max_width = [&](int n) {
    int worst = -1;
    for (int i = 0; i < 50; ++i) {
      ColoredGraph g = width_family_instance(n, rng);
      VertexSet cover;
      if (min_vertex_cut(g, 0, 1, k))
        cover = cover_minimal_separators(g, 0, 1, k);
      VertexSet keep = vset::unite(cover, {0, 1});
      auto tr = torso(g, keep);
      worst = std::max(worst, decompose(tr.graph).width());
    }
    return worst;
  };
  int w20 = batch_max_width(20);
  int w40 = batch_max_width(40);
  int w60 = batch_max_width(60);
  std::ostringstream os;
  os << "widths " << w20 << "/" << w40 << "/" << w60;
  require(w60 <= w20 + 2, "torso width grew with n: " + os.str());
}

// ---- criterion 6: solver/oracle equivalence --------------------------------

void criterion_solver_oracle() {
  // stable_cut and g_mincut
  {
    std::mt19937_64 rng(20115);
    int done = 0;
    while (done < 500) {
      int n = 4 + static_cast<int>(rng() % 6);  // up to 9
      ColoredGraph g = random_graph(n, 0.35, rng);
      int k = 1 + static_cast<int>(rng() % 3);
      if (g.has_edge(0, 1)) continue;
      ++done;
      ConstraintSpec spec = (done % 3 == 0)   ? ConstraintSpec::any()
                            : (done % 3 == 1) ? ConstraintSpec::edgeless(k)
                                              : ConstraintSpec::clique(k);
      auto got = g_mincut(g, 0, 1, k, spec);
      SeparationDemand demand;
      demand.cut_pairs.push_back({{0}, {1}});
      auto brute = oracle::brute_constrained_cut(g, demand, k, spec, {0, 1});
      require(got.has_value() == brute.has_value(), "g_mincut feasibility");
      if (got) require(got->size() == brute->size(), "g_mincut size");
    }
  }
  // edge-induced vertex cut
  {
    std::mt19937_64 rng(20116);
    int done = 0;
    while (done < 500) {
      int n = 4 + static_cast<int>(rng() % 6);
      ColoredGraph g = random_graph(n, 0.3, rng);
      int k = 1 + static_cast<int>(rng() % 2);
      if (g.has_edge(0, 1)) continue;
      ++done;
      auto got = edge_induced_vertex_cut(g, 0, 1, k);
      auto brute = oracle::brute_edge_induced_cut(g, 0, 1, k);
      require(got.has_value() == brute.has_value(), "eivc feasibility");
      if (got) {
        require(static_cast<int>(got->cover.size()) <= k, "eivc cover size");
        require(is_separator(g, got->separator, {0}, {1}), "eivc separator");
      }
    }
  }
  // connected cut
  {
    std::mt19937_64 rng(20117);
    int done = 0;
    while (done < 500) {
      int n = 4 + static_cast<int>(rng() % 6);
      ColoredGraph g = random_graph(n, 0.3, rng);
      int k = 1 + static_cast<int>(rng() % 4);
      if (g.has_edge(0, 1)) continue;
      ++done;
      auto got = connected_cut(g, 0, 1, k);
      SeparationDemand demand;
      demand.cut_pairs.push_back({{0}, {1}});
      auto brute = oracle::brute_constrained_cut(
          g, demand, k, ConstraintSpec::connected_black(), {0, 1});
      require(got.has_value() == brute.has_value(),
              "connected_cut feasibility");
      if (got) require(got->size() == brute->size(), "connected_cut size");
    }
  }
  // multicut-uncut
  {
    std::mt19937_64 rng(20118);
    auto side = [&](int n) {
      VertexSet s;
      while (s.empty())
        for (int v = 0; v < n; ++v)
          if (rng() % 4 == 0) s.push_back(v);
      return s;
    };
    int done = 0;
    while (done < 500) {
      int n = 4 + static_cast<int>(rng() % 5);  // up to 8
      ColoredGraph g = random_graph(n, 0.3, rng);
      int k = 1 + static_cast<int>(rng() % 3);
      int pairs = 1 + static_cast<int>(rng() % 3);  // up to 3
      int uncut = static_cast<int>(rng() % (pairs + 1));
      std::vector<std::pair<VertexSet, VertexSet>> cp, up;
      for (int i = 0; i < pairs - uncut; ++i) cp.push_back({side(n), side(n)});
      for (int i = 0; i < uncut; ++i) up.push_back({side(n), side(n)});
      ConstraintSpec spec =
          (done % 2 == 0) ? ConstraintSpec::any() : ConstraintSpec::edgeless(k);
      ++done;
      auto got = multicut_uncut(g, cp, up, k, spec);
      SeparationDemand demand{cp, up};
      auto brute = oracle::brute_constrained_cut(g, demand, k, spec, {});
      require(got.has_value() == brute.has_value(), "multicut feasibility");
      if (got) require(got->size() == brute->size(), "multicut size");
    }
  }
  // oct and g_bipartization
  {
    std::mt19937_64 rng(20119);
    int done = 0;
    while (done < 500) {
      int n = 4 + static_cast<int>(rng() % 6);
      ColoredGraph g = random_graph(n, 0.3, rng);
      int k = 1 + static_cast<int>(rng() % 3);
      ++done;
      auto brute_oct = oracle::brute_bipartization(
          g, n, [](const ColoredGraph&) { return true; }, false);
      auto got_oct = oct(g, n);
      require(got_oct.has_value() && brute_oct.has_value(), "oct totality");
      require(got_oct->size() == brute_oct->size(), "oct minimality");

      auto got = g_bipartization(g, k, ConstraintSpec::edgeless(k));
      auto brute = oracle::brute_bipartization(
          g, k, [](const ColoredGraph& h) { return h.edge_count() == 0; },
          false);
      require(got.has_value() == brute.has_value(),
              "g_bipartization feasibility");
      if (got) require(got->size() == brute->size(), "g_bipartization size");
    }
  }
  // exact stable bipartization
  {
    std::mt19937_64 rng(20120);
    int done = 0;
    while (done < 500) {
      int n = 4 + static_cast<int>(rng() % 6);
      ColoredGraph g = random_graph(n, 0.3, rng);
      int k = 1 + static_cast<int>(rng() % 3);
      ++done;
      auto got = exact_stable_bipartization(g, k);
      auto brute = oracle::brute_bipartization(
          g, k, [](const ColoredGraph& h) { return h.edge_count() == 0; },
          true);
      require(got.has_value() == brute.has_value(),
              "exact_stable feasibility");
      if (got)
        require(static_cast<int>(got->size()) == k, "exact_stable size");
    }
  }
  // bipartite contraction
  {
    std::mt19937_64 rng(20121);
    int done = 0;
    while (done < 500) {
      int n = 4 + static_cast<int>(rng() % 4);  // up to 7
      ColoredGraph g = random_graph(n, 0.3, rng);
      int k = 1 + static_cast<int>(rng() % 2);
      ++done;
      auto got = bipartite_contraction(g, k);
      auto brute = oracle::brute_contraction(g, k);
      require(got.has_value() == brute.has_value(),
              "contraction feasibility");
      if (got)
        require(is_black_bipartite(contract_edges(g, *got).graph),
                "contraction certificate");
    }
  }
  // hck
  {
    std::mt19937_64 rng(20122);
    auto target = HomTarget::make(
        5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {}, {2, 3, 4},
        {{2, 1}, {3, 1}, {4, 1}});
    int done = 0;
    while (done < 500) {
      int n = 4 + static_cast<int>(rng() % 7);  // up to 10
      ColoredGraph g = random_graph(n, 0.3, rng);
      std::map<int, int> caps{{2, static_cast<int>(rng() % 3)},
                              {3, static_cast<int>(rng() % 3)},
                              {4, static_cast<int>(rng() % 3)}};
      HomTarget t = target;
      t.caps = caps;
      ListAssignment lists(n);
      for (int v = 0; v < n; ++v) {
        VertexSet l;
        while (l.empty())
          for (int u = 0; u < 5; ++u)
            if (rng() % 3 != 0) l.push_back(u);
        lists[v] = l;
      }
      ++done;
      auto got = hck_solve(g, t, lists);
      auto brute = oracle::brute_hck(g, t, lists);
      require(got.has_value() == brute.has_value(), "hck feasibility");
      if (got)
        require(valid_coloring(g, t, lists, got->theta), "hck certificate");
    }
  }
}

// ---- criterion 7: example 5.3 ----------------------------------------------

void criterion_example_53() {
  auto t = HomTarget::make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {},
                           {2, 3, 4}, {{2, 3}, {3, 3}, {4, 3}});
  ColoredGraph g = cycle_graph(15);
  auto lists = full_lists(t, 15);
  auto res = hck_solve(g, t, lists);
  require(res.has_value(), "15-cycle instance infeasible");
  require(valid_coloring(g, t, lists, res->theta), "coloring invalid");
  require(res->exceptional.size() >= 3, "fewer than 3 exceptional vertices");
  auto brute = oracle::brute_hck(g, t, lists, true);
  require(brute.has_value(), "oracle found no coloring");
  require(brute->exceptional.size() == 3,
          "minimum exceptional count is not 3");
}

// ---- criterion 8: figure 2(a) ----------------------------------------------

void criterion_figure_2a() {
  ColoredGraph star = star_graph(4);
  auto res = multicut_uncut(star, {{{1}, {2}}, {{3}, {4}}}, {}, 1,
                            ConstraintSpec::any());
  require(res.has_value(), "star multicut infeasible");
  require(*res == VertexSet{0}, "star multicut is not the center");
}

// ---- criterion 9: steiner oracle -------------------------------------------

void criterion_steiner() {
  std::mt19937_64 rng(20123);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 3 + static_cast<int>(rng() % 8);  // up to 10
    ColoredGraph g;
    if (iter % 3 == 0) {
      // random tree
      g = ColoredGraph(n);
      for (int v = 1; v < n; ++v)
        g.add_edge(v, static_cast<int>(rng() % v));
    } else {
      g = random_graph(n, 0.35, rng);
    }
    VertexSet x;
    for (int v = 0; v < n && x.size() < 4; ++v)
      if (rng() % 3 == 0) x.push_back(v);
    if (x.empty()) x.push_back(0);
    int k = static_cast<int>(x.size()) + static_cast<int>(rng() % 5);
    auto got = steiner_tree_bounded(g, x, k);
    auto brute = oracle::brute_steiner(g, x, k);
    require(got.has_value() == brute.has_value(), "steiner feasibility");
    if (got)
      require(got->size() == brute->size(), "steiner tree size differs");
  }
}

// ---- criterion 10: CLI determinism -----------------------------------------

std::string run_cli(const std::string& args) {
  std::string cmd = g_cli_path + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "cannot run CLI");
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

std::string strip_wall_ms(const std::string& s) {
  std::string out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("\"wall_ms\"") != std::string::npos) continue;
    out += line;
    out += '\n';
  }
  return out;
}

void criterion_cli_determinism() {
  const std::string dir = "/tmp/sepred_acceptance";
  std::string mk = "mkdir -p " + dir;
  require(system(mk.c_str()) == 0, "mkdir failed");

  run_cli("gen --n 24 --m 40 --seed 5 --out " + dir + "/g.gr");
  {
    std::ofstream pairs(dir + "/pairs.txt");
    pairs << "cut 1 | 2\nuncut 3 | 4\n";
  }
  {
    std::ofstream target(dir + "/target.json");
    target << R"({"H": {"n": 5, "edges": [[1,2],[2,3],[3,4],[4,5],[5,1]]},
                  "C": [3,4,5], "K": {"3": 1, "4": 1, "5": 1}})";
  }
  run_cli("gen --n 9 --m 14 --seed 6 --out " + dir + "/h.gr");
  run_cli("gen --n 8 --m 10 --seed 7 --out " + dir + "/s.gr");

  std::vector<std::string> invocations = {
      "gen --n 24 --m 40 --seed 5",
      "mincut --graph " + dir + "/g.gr --s 1 --t 24 --k 3",
      "chain --graph " + dir + "/g.gr --s 1 --t 24",
      "torso --graph " + dir + "/g.gr --set 1,5,9,13",
      "reduce --graph " + dir + "/g.gr --s 1 --t 24 --k 2",
      "stable-cut --graph " + dir + "/g.gr --s 1 --t 24 --k 3 --oracle",
      "hereditary-cut --graph " + dir + "/g.gr --s 1 --t 24 --k 3 --class clique",
      "eivc --graph " + dir + "/h.gr --s 1 --t 9 --k 2",
      "connected-cut --graph " + dir + "/h.gr --s 1 --t 9 --k 3",
      "multicut --graph " + dir + "/s.gr --pairs " + dir +
          "/pairs.txt --k 2 --class all",
      "bipartize --graph " + dir + "/h.gr --k 2 --class edgeless",
      "stable-bipartize --graph " + dir + "/h.gr --k 2",
      "exact-stable-bipartize --graph " + dir + "/h.gr --k 2",
      "edge-bipartize --graph " + dir + "/s.gr --k 1 --class all",
      "contract-bipartite --graph " + dir + "/s.gr --k 1",
      "hck --graph " + dir + "/s.gr --target " + dir + "/target.json",
      "verify stable-cut --graph " + dir + "/s.gr --s 1 --t 8 --k 2",
  };
  for (const auto& inv : invocations) {
    std::string first = strip_wall_ms(run_cli(inv));
    for (int rep = 0; rep < 2; ++rep) {
      std::string again = strip_wall_ms(run_cli(inv));
      require(first == again, "nondeterministic output for: " + inv);
    }
  }
}

// ---- criterion 11: scale smoke test ----------------------------------------

long stable_cut_wall_ms(int n, int m, uint64_t seed) {
  ColoredGraph g = sepred::cli::gen_graph(n, m, 0, false, seed);
  long best = -1;
  for (int rep = 0; rep < 3; ++rep) {
    auto start = std::chrono::steady_clock::now();
    auto res = stable_cut(g, 0, 1, 3);
    (void)res;
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (best < 0 || ms < best) best = ms;
  }
  return best;
}

void criterion_scale() {
  long small = stable_cut_wall_ms(2500, 7500, 11);
  long large = stable_cut_wall_ms(10000, 30000, 12);
  std::ostringstream os;
  os << "2500: " << small << " ms, 10000: " << large << " ms";
  require(large < 60000, "scale run exceeded 60 s (" + os.str() + ")");
  double ratio =
      static_cast<double>(large) / std::max(1.0, static_cast<double>(small));
  require(ratio <= 5.0, "superlinear growth (" + os.str() + ")");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  struct Criterion {
    int id;
    std::string name;
    std::function<void()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "hypercube minimum cuts", criterion_hypercube},
      {2, "chain coverage on 500 random graphs", criterion_chain_coverage},
      {3, "torso algebra on 200 instances", criterion_torso_algebra},
      {4, "reduction coverage and theorem properties",
       criterion_reduction_coverage},
      {5, "torso width stability across n", criterion_width_stability},
      {6, "solver/oracle equivalence (8 solvers x 500 instances)",
       criterion_solver_oracle},
      {7, "15-cycle coloring instance", criterion_example_53},
      {8, "star multicut instance", criterion_figure_2a},
      {9, "bounded steiner trees vs brute force", criterion_steiner},
      {10, "CLI determinism across repeated runs", criterion_cli_determinism},
      {11, "scale smoke test (n=10000)", criterion_scale},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (c.id == 10 && g_cli_path.empty()) {
      std::cout << "[SKIP] criterion " << c.id << ": " << c.name
                << " (no CLI path given)\n";
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    try {
      c.run();
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      std::cout << "[PASS] criterion " << c.id << ": " << c.name << " ("
                << ms << " ms)\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] criterion " << c.id << ": " << c.name << " — "
                << e.what() << "\n";
    }
    std::cout.flush();
  }
  return failures;
}
