#include "sepred/cutsolvers.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "sepred/flow.hpp"
#include "sepred/matching.hpp"
#include "sepred/torso.hpp"
#include "sepred/twreduce.hpp"

namespace sepred {

void PipelineStats::absorb(const PipelineStats& other) {
  reduced_vertices = std::max(reduced_vertices, other.reduced_vertices);
  decomposition_width =
      std::max(decomposition_width, other.decomposition_width);
  dp_states += other.dp_states;
}

namespace {

std::optional<VertexSet> run_dp(const ColoredGraph& g,
                                const SeparationDemand& demand, int k,
                                const ConstraintSpec& spec,
                                const VertexSet& forbidden,
                                PipelineStats* stats) {
  TreeDecomposition td = decompose(g);
  NiceDecomposition nice = make_nice(td);
  SolveStats ss;
  auto res = solve(g, nice, demand, k, spec, forbidden, &ss);
  if (stats) {
    PipelineStats ps;
    ps.reduced_vertices = g.n();
    ps.decomposition_width = td.width();
    ps.dp_states = ss.dp_states;
    stats->absorb(ps);
  }
  return res;
}

}  // namespace

std::optional<VertexSet> g_mincut(const ColoredGraph& g, int s, int t, int k,
                                  const ConstraintSpec& spec,
                                  PipelineStats* stats) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw std::invalid_argument("s and t must differ");
  if (k < 0) return std::nullopt;

  ReductionResult rr = reduce_terminals(g, {std::min(s, t), std::max(s, t)}, k);
  int rs = rr.reduced_id(s), rt = rr.reduced_id(t);
  assert(rs >= 0 && rt >= 0);

  VertexSet forbidden{std::min(rs, rt), std::max(rs, rt)};
  for (size_t v = 0; v < rr.origin_map.size(); ++v)
    if (rr.origin_map[v] == kSubdivision)
      vset::insert(forbidden, static_cast<int>(v));

  SeparationDemand demand;
  demand.cut_pairs.push_back({{rs}, {rt}});
  auto res = run_dp(rr.reduced, demand, k, spec, forbidden, stats);
  if (!res) return std::nullopt;
  VertexSet out;
  for (int v : *res) out.push_back(rr.origin_map[v]);
  return vset::sorted_unique(std::move(out));
}

std::optional<VertexSet> stable_cut(const ColoredGraph& g, int s, int t, int k,
                                    PipelineStats* stats) {
  return g_mincut(g, s, t, k, ConstraintSpec::edgeless(k), stats);
}

ConstraintSpec deficiency_class(int j, int max_vertices) {
  return ConstraintSpec::hereditary_from_oracle(
      [j](const ColoredGraph& h) {
        return h.n() - matching_number_small(h) <= j;
      },
      max_vertices);
}

std::optional<EdgeInducedCut> edge_induced_vertex_cut(const ColoredGraph& g,
                                                      int s, int t, int k,
                                                      PipelineStats* stats) {
  if (k < 0) return std::nullopt;
  auto sep = g_mincut(g, s, t, 2 * k, deficiency_class(k, 2 * k), stats);
  if (!sep) return std::nullopt;

  EdgeInducedCut out;
  out.separator = *sep;
  // cover: a maximum matching of G[S] plus one incident edge per unmatched
  // vertex (S is minimal, hence no vertex of S is isolated in g)
  auto sub = induced_subgraph(g, *sep);
  ColoredGraph black(sub.graph.n());
  for (const auto& [u, v, c] : sub.graph.edges())
    if (c == EdgeColor::Black) black.add_edge(u, v);
  std::vector<char> covered(sub.graph.n(), 0);
  for (const auto& [u, v] : max_matching_small(black)) {
    out.cover.emplace_back(sub.origin[u], sub.origin[v]);
    covered[u] = covered[v] = 1;
  }
  for (int i = 0; i < sub.graph.n(); ++i) {
    if (covered[i]) continue;
    int v = sub.origin[i];
    assert(g.degree(v) > 0);
    int w = g.neighbors(v).front().first;
    out.cover.emplace_back(std::min(v, w), std::max(v, w));
  }
  std::sort(out.cover.begin(), out.cover.end());
  assert(static_cast<int>(out.cover.size()) <= k);
  return out;
}

std::optional<VertexSet> connected_cut(const ColoredGraph& g, int s, int t,
                                       int k, PipelineStats* stats) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw std::invalid_argument("s and t must differ");
  if (k < 0) return std::nullopt;
  if (g.has_edge(s, t)) return std::nullopt;
  auto cut = min_vertex_cut(g, s, t, k);
  if (!cut) return std::nullopt;  // no separator of size <= k at all
  if (cut->first == 0) return VertexSet{};

  VertexSet cover = cover_minimal_separators(g, s, t, k);

  // C'' of Lemma 3.6: for each component of g\C' and each small subset X of
  // its neighborhood, a minimum connected set through X
  VertexSet cpp = cover;
  for (const auto& comp : components_without(g, cover)) {
    VertexSet nb = neighborhood(g, comp);  // always a subset of the cover
    if (nb.empty()) continue;
    VertexSet region = vset::unite(comp, nb);
    auto sub = induced_subgraph(g, region);
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < sub.origin.size(); ++i) local[sub.origin[i]] = (int)i;
    int nn = static_cast<int>(nb.size());
    int cap = std::min(nn, k);
    // all nonempty subsets of nb with at most k elements
    std::vector<int> idx;
    std::function<void(int)> enumerate = [&](int start) {
      if (!idx.empty()) {
        VertexSet x;
        for (int i : idx) x.push_back(nb[i]);
        VertexSet xs;
        for (int v : x) xs.push_back(local[v]);
        auto tree = steiner_tree_bounded(sub.graph, xs, k);
        if (tree)
          for (int v : *tree) vset::insert(cpp, sub.origin[v]);
      }
      if (static_cast<int>(idx.size()) == cap) return;
      for (int i = start; i < nn; ++i) {
        idx.push_back(i);
        enumerate(i + 1);
        idx.pop_back();
      }
    };
    enumerate(0);
  }

  VertexSet keep = cpp;
  vset::insert(keep, s);
  vset::insert(keep, t);
  TorsoResult tr = torso(g, keep);
  int rs = -1, rt = -1;
  for (size_t i = 0; i < tr.origin.size(); ++i) {
    if (tr.origin[i] == s) rs = static_cast<int>(i);
    if (tr.origin[i] == t) rt = static_cast<int>(i);
  }

  SeparationDemand demand;
  demand.cut_pairs.push_back({{rs}, {rt}});
  auto res = run_dp(tr.graph, demand, k, ConstraintSpec::connected_black(),
                    {std::min(rs, rt), std::max(rs, rt)}, stats);
  if (!res) return std::nullopt;
  VertexSet out;
  for (int v : *res) out.push_back(tr.origin[v]);
  return vset::sorted_unique(std::move(out));
}

std::optional<VertexSet> multicut_uncut(
    const ColoredGraph& g,
    const std::vector<std::pair<VertexSet, VertexSet>>& cut_pairs,
    const std::vector<std::pair<VertexSet, VertexSet>>& uncut_pairs, int k,
    const ConstraintSpec& spec, PipelineStats* stats) {
  if (k < 0) return std::nullopt;
  VertexSet cover;
  for (const auto& [x, y] : cut_pairs) {
    auto c = cover_set_separators(g, x, y, k);
    if (!c) return std::nullopt;  // some cut pair is not separable within k
    cover = vset::unite(cover, *c);
  }

  // uncut pairs already connected around the cover never get separated by
  // any S inside it; drop them
  std::vector<std::pair<VertexSet, VertexSet>> kept_uncut;
  for (const auto& [x, y] : uncut_pairs)
    if (is_separator(g, cover, x, y)) kept_uncut.push_back({x, y});

  TorsoResult tr = torso(g, cover);
  std::vector<int> local(g.n(), -1);
  for (size_t i = 0; i < tr.origin.size(); ++i) local[tr.origin[i]] = (int)i;

  auto project = [&](const VertexSet& x, const VertexSet& y) {
    auto [xs, ys] = project_terminals(g, cover, x, y);
    VertexSet xl, yl;
    for (int v : xs) xl.push_back(local[v]);
    for (int v : ys) yl.push_back(local[v]);
    return std::make_pair(vset::sorted_unique(std::move(xl)),
                          vset::sorted_unique(std::move(yl)));
  };

  SeparationDemand demand;
  for (const auto& [x, y] : cut_pairs) demand.cut_pairs.push_back(project(x, y));
  for (const auto& [x, y] : kept_uncut)
    demand.uncut_pairs.push_back(project(x, y));

  auto res = run_dp(tr.graph, demand, k, spec, {}, stats);
  if (!res) return std::nullopt;
  VertexSet out;
  for (int v : *res) out.push_back(tr.origin[v]);
  return vset::sorted_unique(std::move(out));
}

}  // namespace sepred
