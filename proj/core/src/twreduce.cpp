#include "sepred/twreduce.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "sepred/flow.hpp"
#include "sepred/torso.hpp"

namespace sepred {

int ReductionResult::reduced_id(int original) const {
  for (size_t i = 0; i < origin_map.size(); ++i)
    if (origin_map[i] == original) return static_cast<int>(i);
  return -1;
}

namespace {

// Worker behind cover_minimal_separators; returns {} when s,t are
// disconnected or adjacent (an adjacent pair has no separator at all, so
// there is nothing to cover) or when the minimum cut exceeds k.
VertexSet cover_worker(const ColoredGraph& g, int s, int t, int k) {
  if (g.has_edge(s, t)) return {};
  auto cut = min_vertex_cut(g, s, t, k);
  if (!cut) return {};
  int ell = cut->first;
  if (ell == 0) return {};
  int excess = k - ell;

  SeparatorChain chain = separator_chain(g, s, t);
  int q = chain.q();

  VertexSet cover;
  for (const auto& sep : chain.separators) cover = vset::unite(cover, sep);
  if (excess == 0) return cover;

  // layer machinery of Lemma 2.11: X_0 = {}, X_{q+1} = V \ {t},
  // S_0 = {s}, S_{q+1} = {t}, L_i = X_i \ (X_{i-1} u S_{i-1})
  VertexSet all_but_t;
  for (int v = 0; v < g.n(); ++v)
    if (v != t) all_but_t.push_back(v);

  VertexSet x_prev;  // X_{i-1}
  VertexSet x_cur;
  for (int i = 1; i <= q + 1; ++i) {
    const VertexSet& s_prev = (i == 1) ? VertexSet{s} : chain.separators[i - 2];
    const VertexSet& s_cur =
        (i == q + 1) ? VertexSet{t} : chain.separators[i - 1];
    if (i <= q)
      x_cur = vset::unite(x_cur, chain.diffs[i - 1]);
    const VertexSet& x_i = (i == q + 1) ? all_but_t : x_cur;
    VertexSet layer = vset::difference(x_i, vset::unite(x_prev, s_prev));
    x_prev = x_i;
    if (layer.empty()) continue;

    VertexSet boundary = vset::unite(s_prev, s_cur);
    // G_{i,A,B} depends only on the trace of A and B on the layer and on
    // whether an A-B edge exists; dedupe the 3^{|boundary|} assignments by
    // that key before running any flow
    std::vector<int> layer_index(g.n(), -1);
    for (size_t j = 0; j < layer.size(); ++j) layer_index[layer[j]] = (int)j;
    std::map<std::tuple<std::vector<char>, std::vector<char>, bool>, char>
        seen;
    size_t bcount = boundary.size();
    std::vector<int> assign(bcount, 0);
    while (true) {
      VertexSet a_set, b_set;
      for (size_t j = 0; j < bcount; ++j) {
        if (assign[j] == 1) a_set.push_back(boundary[j]);
        if (assign[j] == 2) b_set.push_back(boundary[j]);
      }
      if (!a_set.empty() && !b_set.empty()) {
        std::vector<char> na(layer.size(), 0), nb2(layer.size(), 0);
        bool ab_edge = false;
        for (int u : a_set)
          for (const auto& [w, c] : g.neighbors(u)) {
            (void)c;
            if (layer_index[w] >= 0) na[layer_index[w]] = 1;
            if (vset::contains(b_set, w)) ab_edge = true;
          }
        for (int u : b_set)
          for (const auto& [w, c] : g.neighbors(u)) {
            (void)c;
            if (layer_index[w] >= 0) nb2[layer_index[w]] = 1;
          }
        auto key = std::make_tuple(na, nb2, ab_edge);
        if (!ab_edge && seen.emplace(key, 1).second) {
          // contracted graph on layer + {a, b}
          int ln = static_cast<int>(layer.size());
          ColoredGraph sub(ln + 2);
          int a_id = ln, b_id = ln + 1;
          for (int u : layer)
            for (const auto& [w, c] : g.neighbors(u)) {
              (void)c;
              if (layer_index[w] > layer_index[u])
                sub.add_edge(layer_index[u], layer_index[w]);
            }
          for (int j = 0; j < ln; ++j) {
            if (na[j]) sub.add_edge(a_id, j);
            if (nb2[j]) sub.add_edge(b_id, j);
          }
          auto ab_cut = min_vertex_cut(sub, a_id, b_id, k);
          if (ab_cut && ab_cut->first >= 1) {
            int sub_k = std::min(k, ab_cut->first + excess - 1);
            VertexSet sub_cover = cover_worker(sub, a_id, b_id, sub_k);
            for (int v : sub_cover) vset::insert(cover, layer[v]);
          }
        }
      }
      // next base-3 assignment
      size_t j = 0;
      while (j < bcount && assign[j] == 2) assign[j++] = 0;
      if (j == bcount) break;
      ++assign[j];
    }
  }
  return cover;
}

}  // namespace

VertexSet cover_minimal_separators(const ColoredGraph& g, int s, int t,
                                   int k) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw std::invalid_argument("s and t must differ");
  if (g.has_edge(s, t))
    throw std::invalid_argument("s and t are adjacent: no separator exists");
  auto cut = min_vertex_cut(g, s, t, k);
  if (!cut) throw std::invalid_argument("minimum s-t cut exceeds k");
  if (cut->first == 0) return {};  // disconnected: nothing to cover
  VertexSet out = cover_worker(g, s, t, k);
  assert(!vset::contains(out, s) && !vset::contains(out, t));
  return out;
}

ReductionResult reduce_terminals(const ColoredGraph& g, const VertexSet& t_set,
                                 int k) {
  if (t_set.size() < 2)
    throw std::invalid_argument("need at least two terminals");
  VertexSet cover;
  for (size_t i = 0; i < t_set.size(); ++i)
    for (size_t j = i + 1; j < t_set.size(); ++j) {
      int s = t_set[i], t = t_set[j];
      if (g.has_edge(s, t)) continue;  // minimum size is infinite
      if (!min_vertex_cut(g, s, t, k)) continue;  // not separable within k
      cover = vset::unite(cover, cover_worker(g, s, t, k));
    }

  TorsoResult tr = torso(g, vset::unite(cover, t_set));

  // replace each torso-created edge uv by k+1 subdivision twins, none of
  // which can sit in a separator of size <= k
  ReductionResult out;
  out.cover = cover;
  std::vector<std::pair<int, int>> red;
  for (const auto& [u, v, c] : tr.graph.edges())
    if (c == EdgeColor::Red) red.emplace_back(u, v);

  int base = tr.graph.n();
  int total = base + static_cast<int>(red.size()) * (k + 1);
  out.reduced = ColoredGraph(total);
  out.origin_map.assign(total, kSubdivision);
  for (int v = 0; v < base; ++v) {
    out.origin_map[v] = tr.origin[v];
    out.reduced.set_vertex_label(v, tr.graph.vertex_label(v));
  }
  for (const auto& [u, v, c] : tr.graph.edges())
    if (c == EdgeColor::Black) out.reduced.add_edge(u, v);
  int next = base;
  for (const auto& [u, v] : red)
    for (int copy = 0; copy <= k; ++copy) {
      out.reduced.add_edge(u, next);
      out.reduced.add_edge(next, v);
      ++next;
    }
  return out;
}

std::optional<VertexSet> cover_set_separators(const ColoredGraph& g,
                                              const VertexSet& x,
                                              const VertexSet& y, int k) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("x and y must be nonempty");
  // super-source adjacent to all of x, super-sink adjacent to all of y
  ColoredGraph ext(g.n() + 2);
  for (const auto& [u, v, c] : g.edges()) ext.add_edge(u, v, c);
  int s = g.n(), t = g.n() + 1;
  for (int v : x) ext.add_edge(s, v);
  for (int v : y) ext.add_edge(t, v);
  if (!min_vertex_cut(ext, s, t, k)) return std::nullopt;
  VertexSet cov = cover_worker(ext, s, t, k);
  VertexSet out;
  for (int v : cov)
    if (v < g.n()) out.push_back(v);
  return out;
}

std::pair<VertexSet, VertexSet> project_terminals(const ColoredGraph& g,
                                                  const VertexSet& c,
                                                  const VertexSet& x,
                                                  const VertexSet& y) {
  if (!is_separator(g, c, x, y))
    throw std::invalid_argument("c does not separate x and y");
  auto comps = components_without(g, c);
  auto project = [&](const VertexSet& side) {
    VertexSet star = vset::intersect(side, c);
    for (const auto& comp : comps) {
      if (vset::intersect(comp, side).empty()) continue;
      star = vset::unite(star, vset::intersect(neighborhood(g, comp), c));
    }
    return star;
  };
  return {project(x), project(y)};
}

}  // namespace sepred
