#include "sepred/bipartization.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

#include "sepred/flow.hpp"
#include "sepred/matching.hpp"

namespace sepred {

namespace {

// minimum vertex set compatible with some partition (R, B0, W0) of W:
// removing it and 2-coloring the rest keeps B0 black and W0 white. Exact
// minimum OCT of g when minimized over all partitions (every branch's
// separator is itself a transversal).
std::optional<VertexSet> compress_oct(const ColoredGraph& g,
                                      const VertexSet& w_set, int bound) {
  size_t wn = w_set.size();
  std::optional<VertexSet> best;
  std::vector<int> assign(wn, 0);  // 0 = removed, 1 = black, 2 = white
  while (true) {
    VertexSet removed, b0, w0;
    for (size_t i = 0; i < wn; ++i) {
      if (assign[i] == 0) removed.push_back(w_set[i]);
      if (assign[i] == 1) b0.push_back(w_set[i]);
      if (assign[i] == 2) w0.push_back(w_set[i]);
    }
    bool branch_ok = true;
    for (int u : b0)
      for (int v : b0)
        if (u < v && g.has_black_edge(u, v)) branch_ok = false;
    for (int u : w0)
      for (int v : w0)
        if (u < v && g.has_black_edge(u, v)) branch_ok = false;
    if (branch_ok) {
      // rest of the graph, with a fixed 2-coloring
      VertexSet others;
      for (int v = 0; v < g.n(); ++v)
        if (!vset::contains(w_set, v)) others.push_back(v);
      auto rest = induced_subgraph(g, others);
      auto coloring = bipartite_2coloring(rest.graph);
      assert(coloring);
      TwoColoring orig;  // back to g ids
      for (int v : coloring->b_side) orig.b_side.push_back(rest.origin[v]);
      for (int v : coloring->w_side) orig.w_side.push_back(rest.origin[v]);
      orig.b_side = vset::sorted_unique(std::move(orig.b_side));
      orig.w_side = vset::sorted_unique(std::move(orig.w_side));

      VertexSet b_forced = vset::difference(neighborhood(g, w0), w_set);
      VertexSet w_forced = vset::difference(neighborhood(g, b0), w_set);
      VertexSet x = vset::unite(vset::intersect(b_forced, orig.b_side),
                                vset::intersect(w_forced, orig.w_side));
      VertexSet y = vset::unite(vset::intersect(b_forced, orig.w_side),
                                vset::intersect(w_forced, orig.b_side));

      // aux graph: drop B0 u W0, super-terminals onto X u R and Y u R
      VertexSet alive;
      for (int v = 0; v < g.n(); ++v)
        if (!vset::contains(b0, v) && !vset::contains(w0, v))
          alive.push_back(v);
      auto sub = induced_subgraph(g, alive);
      std::vector<int> local(g.n(), -1);
      for (size_t i = 0; i < sub.origin.size(); ++i)
        local[sub.origin[i]] = static_cast<int>(i);
      ColoredGraph aux(sub.graph.n() + 2);
      for (const auto& [u, v, c] : sub.graph.edges()) aux.add_edge(u, v, c);
      int s_node = sub.graph.n(), t_node = sub.graph.n() + 1;
      for (int v : vset::unite(x, removed)) aux.add_edge(s_node, local[v]);
      for (int v : vset::unite(y, removed)) {
        if (!aux.has_edge(t_node, local[v])) aux.add_edge(t_node, local[v]);
      }
      int cap = bound;
      if (best) cap = std::min(cap, static_cast<int>(best->size()) - 1);
      if (cap >= 0 && !aux.has_edge(s_node, t_node)) {
        auto cut = min_vertex_cut(aux, s_node, t_node, cap);
        if (cut) {
          VertexSet cand;
          for (int v : cut->second) cand.push_back(sub.origin[v]);
          cand = vset::sorted_unique(std::move(cand));
          if (!best || cand.size() < best->size() ||
              (cand.size() == best->size() && cand < *best))
            best = cand;
        }
      }
    }
    size_t j = 0;
    while (j < wn && assign[j] == 2) assign[j++] = 0;
    if (j == wn) break;
    ++assign[j];
  }
  return best;
}

}  // namespace

std::optional<VertexSet> oct(const ColoredGraph& g, int k) {
  if (k < 0) return std::nullopt;
  // iterative compression over the vertices in id order, keeping the
  // transversal of the processed prefix minimum at every step
  VertexSet cur;  // minimum OCT of g[0..i]
  for (int i = 0; i < g.n(); ++i) {
    VertexSet pref;
    for (int v = 0; v <= i; ++v) pref.push_back(v);
    auto sub = induced_subgraph(g, pref);  // ids coincide with g's
    VertexSet w_set = cur;
    vset::insert(w_set, i);
    if (is_black_bipartite(sub.graph)) {
      cur = {};
      continue;
    }
    auto better = compress_oct(sub.graph, w_set,
                               static_cast<int>(w_set.size()) - 1);
    if (better && better->size() < w_set.size())
      cur = *better;
    else
      cur = w_set;
    if (static_cast<int>(cur.size()) > k) return std::nullopt;
  }
  return cur;
}

std::pair<VertexSet, VertexSet> separation_sets(const ColoredGraph& bip,
                                                const TwoColoring& coloring,
                                                const VertexSet& b_target,
                                                const VertexSet& w_target) {
  // sanity: the coloring must be proper on black edges
  for (const auto& [u, v, c] : bip.edges()) {
    if (c != EdgeColor::Black) continue;
    bool ub = vset::contains(coloring.b_side, u);
    bool vb = vset::contains(coloring.b_side, v);
    if (ub == vb) throw std::invalid_argument("improper 2-coloring");
  }
  VertexSet x = vset::unite(vset::intersect(b_target, coloring.b_side),
                            vset::intersect(w_target, coloring.w_side));
  VertexSet y = vset::unite(vset::intersect(b_target, coloring.w_side),
                            vset::intersect(w_target, coloring.b_side));
  return {x, y};
}

namespace {

// one branch of Theorem 4.2: fix (R, B0, W0), build G' and run G-MINCUT
std::optional<VertexSet> bipartization_branch(const ColoredGraph& g,
                                              const VertexSet& s0,
                                              const VertexSet& removed,
                                              const VertexSet& b0,
                                              const VertexSet& w0, int k,
                                              const ConstraintSpec& spec,
                                              PipelineStats* stats) {
  for (int u : b0)
    for (int v : b0)
      if (u < v && g.has_black_edge(u, v)) return std::nullopt;
  for (int u : w0)
    for (int v : w0)
      if (u < v && g.has_black_edge(u, v)) return std::nullopt;

  VertexSet others;
  for (int v = 0; v < g.n(); ++v)
    if (!vset::contains(s0, v)) others.push_back(v);
  auto rest = induced_subgraph(g, others);
  auto coloring = bipartite_2coloring(rest.graph);
  if (!coloring) throw std::logic_error("s0 is not a transversal");
  TwoColoring orig;
  for (int v : coloring->b_side) orig.b_side.push_back(rest.origin[v]);
  for (int v : coloring->w_side) orig.w_side.push_back(rest.origin[v]);
  orig.b_side = vset::sorted_unique(std::move(orig.b_side));
  orig.w_side = vset::sorted_unique(std::move(orig.w_side));

  VertexSet b_forced = vset::difference(neighborhood(g, w0), s0);
  VertexSet w_forced = vset::difference(neighborhood(g, b0), s0);
  VertexSet x = vset::unite(vset::intersect(b_forced, orig.b_side),
                            vset::intersect(w_forced, orig.w_side));
  VertexSet y = vset::unite(vset::intersect(b_forced, orig.w_side),
                            vset::intersect(w_forced, orig.b_side));

  VertexSet alive;
  for (int v = 0; v < g.n(); ++v)
    if (!vset::contains(b0, v) && !vset::contains(w0, v)) alive.push_back(v);
  auto sub = induced_subgraph(g, alive);
  std::vector<int> local(g.n(), -1);
  for (size_t i = 0; i < sub.origin.size(); ++i)
    local[sub.origin[i]] = static_cast<int>(i);
  ColoredGraph aux(sub.graph.n() + 2);
  for (int v = 0; v < sub.graph.n(); ++v)
    aux.set_vertex_label(v, sub.graph.vertex_label(v));
  for (const auto& [u, v, c] : sub.graph.edges()) aux.add_edge(u, v, c);
  int s_node = sub.graph.n(), t_node = sub.graph.n() + 1;
  for (int v : vset::unite(x, removed)) aux.add_edge(s_node, local[v]);
  for (int v : vset::unite(y, removed))
    if (!aux.has_edge(t_node, local[v])) aux.add_edge(t_node, local[v]);

  auto res = g_mincut(aux, s_node, t_node, k, spec, stats);
  if (!res) return std::nullopt;
  VertexSet out;
  for (int v : *res) out.push_back(sub.origin[v]);
  return vset::sorted_unique(std::move(out));
}

}  // namespace

std::optional<VertexSet> g_bipartization(const ColoredGraph& g, int k,
                                         const ConstraintSpec& spec,
                                         PipelineStats* stats) {
  if (k < 0) return std::nullopt;
  auto s0 = oct(g, k);
  if (!s0) return std::nullopt;

  std::optional<VertexSet> best;
  size_t wn = s0->size();
  std::vector<int> assign(wn, 0);
  while (true) {
    VertexSet removed, b0, w0;
    for (size_t i = 0; i < wn; ++i) {
      if (assign[i] == 0) removed.push_back((*s0)[i]);
      if (assign[i] == 1) b0.push_back((*s0)[i]);
      if (assign[i] == 2) w0.push_back((*s0)[i]);
    }
    auto cand = bipartization_branch(g, *s0, removed, b0, w0, k, spec, stats);
    if (cand && (!best || cand->size() < best->size() ||
                 (cand->size() == best->size() && *cand < *best)))
      best = cand;
    size_t j = 0;
    while (j < wn && assign[j] == 2) assign[j++] = 0;
    if (j == wn) break;
    ++assign[j];
  }
  return best;
}

std::optional<std::vector<int>> shortest_odd_cycle(const ColoredGraph& g,
                                                   const VertexSet& s_known) {
  {
    VertexSet all;
    for (int v = 0; v < g.n(); ++v) all.push_back(v);
    if (!is_black_bipartite(
            induced_subgraph(g, vset::difference(all, s_known)).graph))
      throw std::invalid_argument("g minus s_known is not bipartite");
  }
  if (is_black_bipartite(g)) return std::nullopt;

  // double cover: v1 = 2v, v2 = 2v+1; edge uv becomes u1v2 and u2v1.
  // an odd closed walk through v is a v1 -> v2 path
  int n = g.n();
  std::vector<std::vector<int>> adj(2 * n);
  for (const auto& [u, v, c] : g.edges()) {
    if (c != EdgeColor::Black) continue;
    adj[2 * u].push_back(2 * v + 1);
    adj[2 * v + 1].push_back(2 * u);
    adj[2 * u + 1].push_back(2 * v);
    adj[2 * v].push_back(2 * u + 1);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());

  int best_len = -1;
  std::vector<int> best_walk;
  for (int v : s_known) {
    std::vector<int> parent(2 * n, -2);
    std::queue<int> q;
    q.push(2 * v);
    parent[2 * v] = -1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (u == 2 * v + 1) break;
      for (int w : adj[u])
        if (parent[w] == -2) {
          parent[w] = u;
          q.push(w);
        }
    }
    if (parent[2 * v + 1] == -2) continue;
    std::vector<int> walk;
    for (int u = 2 * v + 1; u != -1; u = parent[u]) walk.push_back(u / 2);
    std::reverse(walk.begin(), walk.end());
    int len = static_cast<int>(walk.size()) - 1;
    if (best_len == -1 || len < best_len) {
      best_len = len;
      best_walk = walk;
    }
  }
  if (best_len == -1) return std::nullopt;

  // best_walk is a closed odd walk (first == last vertex); extract a simple
  // odd cycle from it
  std::vector<int> walk = best_walk;
  walk.pop_back();  // closed: drop the duplicate endpoint
  while (true) {
    std::vector<int> pos(g.n(), -1);
    int li = -1, lj = -1;
    int wn2 = static_cast<int>(walk.size());
    for (int i = 0; i < wn2 && li == -1; ++i) {
      if (pos[walk[i]] != -1) {
        li = pos[walk[i]];
        lj = i;
      } else {
        pos[walk[i]] = i;
      }
    }
    if (li == -1) break;  // simple
    // split the closed walk at the repeated vertex into two closed walks;
    // keep an odd one
    std::vector<int> inner(walk.begin() + li, walk.begin() + lj);
    std::vector<int> outer(walk.begin(), walk.begin() + li);
    outer.insert(outer.end(), walk.begin() + lj, walk.end());
    walk = (inner.size() % 2 == 1) ? inner : outer;
  }
  return walk;
}

namespace {

// annotated recursion of Theorem 4.5 on (alive vertex set, allowed set D);
// returns the chosen independent set in original ids
std::optional<VertexSet> esb_rec(const ColoredGraph& g, const VertexSet& alive,
                                 const VertexSet& d, int k,
                                 PipelineStats* stats) {
  auto sub = induced_subgraph(g, alive);
  std::vector<int> local(g.n(), -1);
  for (size_t i = 0; i < sub.origin.size(); ++i)
    local[sub.origin[i]] = static_cast<int>(i);
  VertexSet d_local;
  for (int v : d) d_local.push_back(local[v]);
  d_local = vset::sorted_unique(std::move(d_local));

  bool bip = is_black_bipartite(sub.graph);
  if (k == 0) {
    if (bip) return VertexSet{};
    return std::nullopt;
  }
  if (bip) {
    // polynomial case: independent set of size exactly k inside D, via a
    // maximum matching and Konig's theorem (alpha >= k suffices, shrink)
    auto dsub = induced_subgraph(sub.graph, d_local);
    VertexSet mis = max_independent_set_bipartite(dsub.graph);
    if (static_cast<int>(mis.size()) < k) return std::nullopt;
    VertexSet out;
    for (int i = 0; i < k; ++i)
      out.push_back(sub.origin[dsub.origin[mis[i]]]);
    return vset::sorted_unique(std::move(out));
  }
  {
    VertexSet rest_local;
    for (int v : vset::difference(alive, d)) rest_local.push_back(local[v]);
    rest_local = vset::sorted_unique(std::move(rest_local));
    if (!is_black_bipartite(induced_subgraph(sub.graph, rest_local).graph))
      return std::nullopt;  // any solution inside D leaves g\D intact
  }

  auto s_oct = oct(sub.graph, k);
  if (!s_oct) return std::nullopt;
  auto cyc = shortest_odd_cycle(sub.graph, *s_oct);
  assert(cyc);
  VertexSet cd = vset::intersect(vset::sorted_unique(*cyc), d_local);
  assert(!cd.empty());

  if (static_cast<int>(cd.size()) <= 3 * k + 1) {
    for (int v_local : cd) {
      int v = sub.origin[v_local];
      VertexSet alive2 = vset::difference(alive, {v});
      VertexSet nv;
      for (const auto& [w, c] : sub.graph.neighbors(v_local)) {
        if (c != EdgeColor::Black) continue;
        nv.push_back(sub.origin[w]);
      }
      nv = vset::sorted_unique(std::move(nv));
      VertexSet d2 = vset::intersect(
          vset::difference(vset::difference(d, {v}), nv), alive2);
      auto rec = esb_rec(g, alive2, d2, k - 1, stats);
      if (rec) {
        VertexSet out = *rec;
        vset::insert(out, v);
        return out;
      }
    }
    return std::nullopt;
  }

  // long chordless cycle: stable bipartization restricted to D (vertices
  // outside D split into k+1 independent twins), then pad the solution
  // with independent cycle vertices
  VertexSet outside = vset::difference(
      [&] {
        VertexSet all;
        for (int v = 0; v < sub.graph.n(); ++v) all.push_back(v);
        return all;
      }(),
      d_local);
  int dn = static_cast<int>(d_local.size());
  ColoredGraph split(dn + static_cast<int>(outside.size()) * (k + 1));
  std::vector<int> dpos(sub.graph.n(), -1), opos(sub.graph.n(), -1);
  for (int i = 0; i < dn; ++i) dpos[d_local[i]] = i;
  for (size_t i = 0; i < outside.size(); ++i)
    opos[outside[i]] = static_cast<int>(i);
  auto copy_id = [&](int v, int c) { return dn + opos[v] * (k + 1) + c; };
  for (const auto& [u, v, col] : sub.graph.edges()) {
    (void)col;
    bool ud = dpos[u] >= 0, vd = dpos[v] >= 0;
    if (ud && vd) {
      split.add_edge(dpos[u], dpos[v]);
    } else if (ud) {
      for (int c = 0; c <= k; ++c) split.add_edge(dpos[u], copy_id(v, c));
    } else if (vd) {
      for (int c = 0; c <= k; ++c) split.add_edge(dpos[v], copy_id(u, c));
    } else {
      for (int c1 = 0; c1 <= k; ++c1)
        for (int c2 = 0; c2 <= k; ++c2)
          split.add_edge(copy_id(u, c1), copy_id(v, c2));
    }
  }
  auto s_res = g_bipartization(split, k, ConstraintSpec::edgeless(k), stats);
  if (!s_res) return std::nullopt;
  VertexSet chosen;
  for (int v : *s_res) {
    assert(v < dn);  // minimum solutions never touch the twins
    chosen.push_back(sub.origin[d_local[v]]);
  }
  chosen = vset::sorted_unique(std::move(chosen));
  int missing = k - static_cast<int>(chosen.size());
  if (missing == 0) return chosen;

  // each solution vertex forbids at most 3 cycle vertices, so at least
  // 3*missing + 1 allowed ones remain on the chordless cycle
  VertexSet chosen_local;
  for (int v : chosen) chosen_local.push_back(local[v]);
  chosen_local = vset::sorted_unique(std::move(chosen_local));
  VertexSet blocked = chosen_local;
  for (int v : chosen_local)
    for (const auto& [w, c] : sub.graph.neighbors(v)) {
      if (c != EdgeColor::Black) continue;
      vset::insert(blocked, w);
    }
  const std::vector<int>& order = *cyc;
  int cl = static_cast<int>(order.size());
  std::vector<char> allowed(cl, 0);
  int allowed_count = 0;
  for (int i = 0; i < cl; ++i) {
    if (vset::contains(cd, order[i]) && !vset::contains(blocked, order[i])) {
      allowed[i] = 1;
      ++allowed_count;
    }
  }
  assert(allowed_count >= 3 * missing + 1);
  std::vector<char> picked(cl, 0);
  VertexSet extension;
  for (int i = 0; i < cl && missing > 0; ++i) {
    if (!allowed[i]) continue;
    int prev = (i + cl - 1) % cl, next = (i + 1) % cl;
    if (picked[prev] || picked[next]) continue;
    picked[i] = 1;
    extension.push_back(sub.origin[order[i]]);
    --missing;
  }
  assert(missing == 0);
  return vset::unite(chosen, extension);
}

}  // namespace

std::optional<VertexSet> exact_stable_bipartization(const ColoredGraph& g,
                                                    int k,
                                                    PipelineStats* stats) {
  if (k < 0) return std::nullopt;
  VertexSet all;
  for (int v = 0; v < g.n(); ++v) all.push_back(v);
  return esb_rec(g, all, all, k, stats);
}

EdgeEncoding encode_edge_instance(const ColoredGraph& g) {
  EdgeEncoding enc;
  enc.n = g.n();
  for (const auto& [u, v, c] : g.edges()) {
    (void)c;
    enc.edge_list.emplace_back(u, v);
  }
  std::sort(enc.edge_list.begin(), enc.edge_list.end());
  enc.m = static_cast<int>(enc.edge_list.size());

  enc.gp = ColoredGraph(2 * enc.n + 2 * enc.m);
  for (int v = 0; v < enc.n; ++v) {
    enc.gp.set_vertex_label(enc.v1(v), 1);
    enc.gp.set_vertex_label(enc.v2(v), 2);
    enc.gp.add_edge(enc.v1(v), enc.v2(v));
  }
  for (int j = 0; j < enc.m; ++j) {
    auto [u, v] = enc.edge_list[j];
    enc.gp.set_vertex_label(enc.e1(j), 3);
    enc.gp.set_vertex_label(enc.e2(j), 3);
    enc.gp.add_edge(enc.e1(j), enc.v1(u));
    enc.gp.add_edge(enc.e1(j), enc.v2(v));
    enc.gp.add_edge(enc.e2(j), enc.v2(u));
    enc.gp.add_edge(enc.e2(j), enc.v1(v));
  }

  enc.gpp = ColoredGraph(2 * enc.n + 2 * enc.m + 2 * enc.n);
  for (int v = 0; v < enc.gp.n(); ++v)
    enc.gpp.set_vertex_label(v, enc.gp.vertex_label(v));
  for (const auto& [u, v, c] : enc.gp.edges()) enc.gpp.add_edge(u, v, c);
  for (int v = 0; v < enc.n; ++v) {
    enc.gpp.set_vertex_label(enc.vbar1(v), 4);
    enc.gpp.set_vertex_label(enc.vbar2(v), 4);
    enc.gpp.add_edge(enc.vbar1(v), enc.vbar2(v));
    for (const auto& [w, c] : enc.gp.neighbors(enc.v1(v))) {
      (void)c;
      enc.gpp.add_edge(enc.vbar1(v), w);
    }
    for (const auto& [w, c] : enc.gp.neighbors(enc.v2(v))) {
      (void)c;
      enc.gpp.add_edge(enc.vbar2(v), w);
    }
    for (const auto& [w, c] : g.neighbors(v)) {
      (void)c;
      enc.gpp.add_edge(enc.vbar1(v), enc.v1(w));
      enc.gpp.add_edge(enc.vbar2(v), enc.v2(w));
    }
  }
  return enc;
}

EdgeClass build_edge_class(
    const std::function<bool(const ColoredGraph&)>& class_member, int k) {
  // members H: at most k edges, no isolated vertices (so at most 2k
  // vertices), in the class; the compiled set holds H' and its induced
  // subgraphs with labels respected
  EdgeClass out;
  std::vector<CanonicalGraph> members;
  std::unordered_set<CanonicalGraph, CanonicalGraphHash> seen_h, seen;
  int max_n = std::min(2 * k, 6);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      if (__builtin_popcount(mask) > k) continue;
      ColoredGraph h(n);
      for (size_t i = 0; i < pairs.size(); ++i)
        if (mask & (1u << i)) h.add_edge(pairs[i].first, pairs[i].second);
      bool isolated = false;
      for (int v = 0; v < n; ++v)
        if (h.degree(v) == 0) isolated = true;
      if (isolated) continue;
      if (!class_member(h)) continue;
      CanonicalGraph hc = canonicalize(h);
      if (!seen_h.insert(hc).second) continue;

      EdgeEncoding enc = encode_edge_instance(h);
      if (enc.gp.n() > kCanonMaxVertices)
        throw std::invalid_argument(
            "edge bipartization class member too large to canonicalize");
      out.budget = std::max(out.budget, enc.gp.n());
      // all induced subgraphs of H'
      int np = enc.gp.n();
      for (uint32_t sub = 0; sub < (1u << np); ++sub) {
        VertexSet verts;
        for (int v = 0; v < np; ++v)
          if (sub & (1u << v)) verts.push_back(v);
        CanonicalGraph c =
            canonicalize(induced_subgraph(enc.gp, verts).graph);
        if (seen.insert(c).second) members.push_back(c);
      }
    }
  }
  out.spec = ConstraintSpec::hereditary_from_members(members);
  return out;
}

std::optional<std::vector<std::pair<int, int>>> g_edge_bipartization(
    const ColoredGraph& g, int k,
    const std::function<bool(const ColoredGraph&)>& class_member,
    PipelineStats* stats) {
  if (k < 0) return std::nullopt;
  EdgeClass cls = build_edge_class(class_member, k);
  EdgeEncoding enc = encode_edge_instance(g);
  auto s = g_bipartization(enc.gpp, cls.budget, cls.spec, stats);
  if (!s) return std::nullopt;

  // recover H: 2-color G'' minus S; an edge of g joins same-colored
  // endpoints iff it belongs to H (label-4 twins always survive)
  VertexSet alive;
  for (int v = 0; v < enc.gpp.n(); ++v)
    if (!vset::contains(*s, v)) alive.push_back(v);
  auto rest = induced_subgraph(enc.gpp, alive);
  auto coloring = bipartite_2coloring(rest.graph);
  assert(coloring);
  std::vector<char> black_side(enc.gpp.n(), 0);
  for (int v : coloring->b_side) black_side[rest.origin[v]] = 1;

  std::vector<std::pair<int, int>> h_edges;
  for (int j = 0; j < enc.m; ++j) {
    auto [u, v] = enc.edge_list[j];
    if (black_side[enc.vbar1(u)] == black_side[enc.vbar1(v)])
      h_edges.emplace_back(u, v);
  }
  assert(static_cast<int>(h_edges.size()) <= k);
  return h_edges;
}

std::optional<std::vector<std::pair<int, int>>> bipartite_contraction(
    const ColoredGraph& g, int k, PipelineStats* stats) {
  if (is_black_bipartite(g)) return std::vector<std::pair<int, int>>{};
  if (k <= 0) return std::nullopt;

  // Lemma 4.8: contracting <= k edges is deleting the edges of a rank-<= k
  // subgraph H. A minimal such H has monochromatic components, hence at
  // most k(k+1)/2 edges.
  int edge_budget = k * (k + 1) / 2;
  auto rank_at_most_k = [k](const ColoredGraph& h) {
    return h.n() - static_cast<int>(components(h).size()) <= k;
  };
  auto h_edges = g_edge_bipartization(g, edge_budget, rank_at_most_k, stats);
  if (!h_edges) return std::nullopt;

  // minimalize H, then contract a spanning forest of it
  std::vector<std::pair<int, int>> h = *h_edges;
  std::sort(h.begin(), h.end());
  for (size_t i = 0; i < h.size();) {
    std::vector<std::pair<int, int>> without = h;
    without.erase(without.begin() + i);
    ColoredGraph rest(g.n());
    for (const auto& [u, v, c] : g.edges()) {
      bool dropped = false;
      for (const auto& [a, b] : without)
        if (a == u && b == v) dropped = true;
      if (!dropped) rest.add_edge(u, v, c);
    }
    if (is_black_bipartite(rest))
      h = without;
    else
      ++i;
  }

  // spanning forest of H by union-find over its edges
  std::vector<int> parent(g.n());
  for (int v = 0; v < g.n(); ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::pair<int, int>> forest;
  for (const auto& [u, v] : h) {
    int ru = find(u), rv = find(v);
    if (ru == rv) continue;
    parent[std::max(ru, rv)] = std::min(ru, rv);
    forest.emplace_back(u, v);
  }
  assert(static_cast<int>(forest.size()) <= k);
  assert(is_black_bipartite(contract_edges(g, forest).graph));
  return forest;
}

}  // namespace sepred
