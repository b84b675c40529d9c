#include "sepred/hck.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "sepred/bipartization.hpp"
#include "sepred/twreduce.hpp"

namespace sepred {

HomTarget HomTarget::make(int h_n,
                          const std::vector<std::pair<int, int>>& edges,
                          const std::vector<int>& loops, const VertexSet& c,
                          const std::map<int, int>& caps) {
  HomTarget t;
  t.h_n = h_n;
  t.h_adj.assign(h_n, std::vector<char>(h_n, 0));
  auto check = [h_n](int v) {
    if (v < 0 || v >= h_n)
      throw std::invalid_argument("H vertex id out of range");
  };
  for (const auto& [x, y] : edges) {
    check(x);
    check(y);
    if (x == y) throw std::invalid_argument("use loops for self-edges of H");
    t.h_adj[x][y] = t.h_adj[y][x] = 1;
  }
  for (int v : loops) {
    check(v);
    t.h_adj[v][v] = 1;
  }
  t.c = c;
  for (int v : c) check(v);
  VertexSet rest;
  for (int v = 0; v < h_n; ++v)
    if (!vset::contains(c, v)) rest.push_back(v);
  if (rest.size() != 2)
    throw std::invalid_argument("H minus C must have exactly two vertices");
  t.b = rest[0];
  t.w = rest[1];
  if (!t.h_adj[t.b][t.w])
    throw std::invalid_argument("H minus C must be a single edge");
  if (t.h_adj[t.b][t.b] || t.h_adj[t.w][t.w])
    throw std::invalid_argument("the edge of H minus C must be loopless");
  for (int v : c) {
    auto it = caps.find(v);
    if (it == caps.end())
      throw std::invalid_argument("missing cap for a vertex of C");
    if (it->second < 0) throw std::invalid_argument("negative cap");
    t.caps[v] = it->second;
  }
  return t;
}

int HomTarget::cap(int v) const {
  auto it = caps.find(v);
  if (it == caps.end()) throw std::invalid_argument("vertex not in C");
  return it->second;
}

int HomTarget::total_cap() const {
  int k = 0;
  for (const auto& [v, cap] : caps) k += cap;
  return k;
}

ListAssignment full_lists(const HomTarget& target, int n) {
  VertexSet all;
  for (int v = 0; v < target.h_n; ++v) all.push_back(v);
  return ListAssignment(n, all);
}

bool valid_coloring(const ColoredGraph& g, const HomTarget& target,
                    const ListAssignment& lists,
                    const std::vector<int>& theta) {
  if (static_cast<int>(theta.size()) != g.n()) return false;
  std::vector<int> used(target.h_n, 0);
  for (int v = 0; v < g.n(); ++v) {
    if (theta[v] < 0 || theta[v] >= target.h_n) return false;
    if (!vset::contains(lists[v], theta[v])) return false;
    ++used[theta[v]];
  }
  for (int v : target.c)
    if (used[v] > target.cap(v)) return false;
  for (const auto& [u, v, c] : g.edges()) {
    if (c != EdgeColor::Black) continue;
    if (!target.adjacent(theta[u], theta[v])) return false;
  }
  return true;
}

namespace {

std::string memo_key(const ColoredGraph& g, const ListAssignment& lists,
                     int k) {
  std::ostringstream os;
  os << g.n() << '|' << k << '|';
  for (const auto& [u, v, c] : g.edges()) {
    (void)c;
    os << u << ',' << v << ';';
  }
  os << '|';
  for (const auto& l : lists) {
    for (int x : l) os << x << ',';
    os << ';';
  }
  return os.str();
}

VertexSet reduce_rec(const ColoredGraph& g, const HomTarget& target,
                     const ListAssignment& lists, int k,
                     std::unordered_map<std::string, VertexSet>& memo);

// recursion into one component with the neighborhood assignment fixed
void reduce_component(const ColoredGraph& g, const HomTarget& target,
                      const ListAssignment& lists, int k,
                      const VertexSet& comp, const VertexSet& nb,
                      VertexSet& out,
                      std::unordered_map<std::string, VertexSet>& memo) {
  auto sub = induced_subgraph(g, comp);
  std::vector<int> local(g.n(), -1);
  for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = (int)i;

  int nn = static_cast<int>(nb.size());
  double combos = std::pow(static_cast<double>(target.h_n), nn);
  if (combos > 1e7)
    throw std::invalid_argument("component neighborhood too large");

  std::vector<int> theta(nn, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < nn && ok; ++i) {
      if (!vset::contains(lists[nb[i]], theta[i])) ok = false;
      for (int j = i + 1; j < nn && ok; ++j)
        if (g.has_black_edge(nb[i], nb[j]) &&
            !target.adjacent(theta[i], theta[j]))
          ok = false;
    }
    if (ok) {
      // lists on the component filtered through the fixed assignment
      ListAssignment sub_lists(comp.size());
      bool feasible = true;
      for (size_t i = 0; i < comp.size() && feasible; ++i) {
        VertexSet l;
        for (int u : lists[comp[i]]) {
          bool allowed = true;
          for (int j = 0; j < nn; ++j)
            if (g.has_black_edge(comp[i], nb[j]) &&
                !target.adjacent(theta[j], u)) {
              allowed = false;
              break;
            }
          if (allowed) l.push_back(u);
        }
        sub_lists[i] = l;
        if (l.empty()) feasible = false;
      }
      if (feasible) {
        for (int budget = 0; budget <= k - 1; ++budget) {
          VertexSet inner =
              reduce_rec(sub.graph, target, sub_lists, budget, memo);
          for (int v : inner) vset::insert(out, comp[v]);
        }
      }
    }
    int i = 0;
    while (i < nn && theta[i] == target.h_n - 1) theta[i++] = 0;
    if (i == nn) break;
    ++theta[i];
  }
}

VertexSet reduce_rec(const ColoredGraph& g, const HomTarget& target,
                     const ListAssignment& lists, int k,
                     std::unordered_map<std::string, VertexSet>& memo) {
  if (k <= 0) return {};
  std::string key = memo_key(g, lists, k);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  VertexSet b_set, w_set;
  for (int v = 0; v < g.n(); ++v) {
    if (!vset::contains(lists[v], target.w)) b_set.push_back(v);
    if (!vset::contains(lists[v], target.b)) w_set.push_back(v);
  }
  auto coloring = bipartite_2coloring(g);
  if (!coloring) throw std::invalid_argument("graph is not bipartite");
  auto [x, y] = separation_sets(g, *coloring, b_set, w_set);

  VertexSet result;
  bool linked = false;
  if (!x.empty() && !y.empty()) {
    if (!vset::intersect(x, y).empty()) linked = true;
    if (!linked)
      for (const auto& comp : components(g))
        if (!vset::intersect(comp, x).empty() &&
            !vset::intersect(comp, y).empty()) {
          linked = true;
          break;
        }
  }
  if (linked) {
    auto cov = cover_set_separators(g, x, y, k);
    if (cov) {
      result = *cov;
      for (const auto& comp : components_without(g, result)) {
        VertexSet nb = neighborhood(g, comp);
        reduce_component(g, target, lists, k, comp, nb, result, memo);
      }
    }
    // not separable within k: no coloring uses at most k exceptional
    // vertices, so there is nothing to cover
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

VertexSet hck_reduce_bipartite(const ColoredGraph& g, const HomTarget& target,
                               const ListAssignment& lists, int k) {
  if (!is_black_bipartite(g))
    throw std::invalid_argument("graph is not bipartite");
  if (static_cast<int>(lists.size()) != g.n())
    throw std::invalid_argument("list assignment size mismatch");
  std::unordered_map<std::string, VertexSet> memo;
  return reduce_rec(g, target, lists, k, memo);
}

namespace {

struct BoundedState {
  std::vector<int8_t> bag_color;   // per bag position
  std::vector<uint8_t> used;       // per target.c position, capped counts
  std::vector<int8_t> theta;       // full assignment, -1 when unprocessed
};

std::string bounded_key(const BoundedState& s) {
  std::string key(s.bag_color.begin(), s.bag_color.end());
  key.push_back(127);
  key.append(s.used.begin(), s.used.end());
  return key;
}

}  // namespace

std::optional<Coloring> hck_solve_bounded(const ColoredGraph& g,
                                          const HomTarget& target,
                                          const ListAssignment& lists, int k,
                                          const NiceDecomposition& nice) {
  (void)k;
  if (auto err = validate_nice(g, nice))
    throw std::invalid_argument("invalid decomposition: " + *err);
  if (static_cast<int>(lists.size()) != g.n())
    throw std::invalid_argument("list assignment size mismatch");
  for (const auto& l : lists)
    for (int u : l)
      if (u < 0 || u >= target.h_n)
        throw std::invalid_argument("list entry out of range");

  int nc = static_cast<int>(target.c.size());
  auto cpos = [&](int h_vertex) {
    auto it = std::lower_bound(target.c.begin(), target.c.end(), h_vertex);
    if (it == target.c.end() || *it != h_vertex) return -1;
    return static_cast<int>(it - target.c.begin());
  };

  using Table = std::unordered_map<std::string, BoundedState>;
  auto offer = [&](Table& t, BoundedState&& s) {
    std::string key = bounded_key(s);
    auto it = t.find(key);
    if (it == t.end())
      t.emplace(std::move(key), std::move(s));
    else if (s.theta < it->second.theta)
      it->second = std::move(s);
  };

  std::vector<Table> tables(nice.nodes.size());
  std::vector<int> order;
  {
    std::vector<int> stack{nice.root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      order.push_back(u);
      if (nice.nodes[u].child0 >= 0) stack.push_back(nice.nodes[u].child0);
      if (nice.nodes[u].child1 >= 0) stack.push_back(nice.nodes[u].child1);
    }
    std::reverse(order.begin(), order.end());
  }

  using Kind = NiceDecomposition::Kind;
  for (int node : order) {
    const auto& nd = nice.nodes[node];
    Table& out = tables[node];
    switch (nd.kind) {
      case Kind::Leaf: {
        BoundedState s;
        s.used.assign(nc, 0);
        s.theta.assign(g.n(), -1);
        offer(out, std::move(s));
        break;
      }
      case Kind::Introduce: {
        const auto& cbag = nice.nodes[nd.child0].bag;
        int pv = static_cast<int>(
            std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.vertex) -
            nd.bag.begin());
        for (const auto& [key, cs] : tables[nd.child0]) {
          (void)key;
          for (int color : lists[nd.vertex]) {
            bool ok = true;
            for (size_t i = 0; i < cbag.size() && ok; ++i)
              if (g.has_black_edge(nd.vertex, cbag[i]) &&
                  !target.adjacent(color, cs.bag_color[i]))
                ok = false;
            if (!ok) continue;
            int cp = cpos(color);
            if (cp >= 0 && cs.used[cp] >= target.cap(color)) continue;
            BoundedState s = cs;
            s.bag_color.insert(s.bag_color.begin() + pv,
                               static_cast<int8_t>(color));
            if (cp >= 0) s.used[cp] += 1;
            s.theta[nd.vertex] = static_cast<int8_t>(color);
            offer(out, std::move(s));
          }
        }
        tables[nd.child0].clear();
        break;
      }
      case Kind::Forget: {
        const auto& cbag = nice.nodes[nd.child0].bag;
        int cv = static_cast<int>(
            std::lower_bound(cbag.begin(), cbag.end(), nd.vertex) -
            cbag.begin());
        for (const auto& [key, cs] : tables[nd.child0]) {
          (void)key;
          BoundedState s = cs;
          s.bag_color.erase(s.bag_color.begin() + cv);
          offer(out, std::move(s));
        }
        tables[nd.child0].clear();
        break;
      }
      case Kind::Join: {
        const auto& bag = nd.bag;
        std::unordered_map<std::string, std::vector<const BoundedState*>>
            rbucket;
        for (const auto& [key, rs] : tables[nd.child1]) {
          (void)key;
          std::string bkey(rs.bag_color.begin(), rs.bag_color.end());
          rbucket[bkey].push_back(&rs);
        }
        for (const auto& [key, lsheet] : tables[nd.child0]) {
          (void)key;
          const BoundedState& ls = lsheet;
          std::string bkey(ls.bag_color.begin(), ls.bag_color.end());
          auto it = rbucket.find(bkey);
          if (it == rbucket.end()) continue;
          std::vector<uint8_t> bag_used(nc, 0);
          for (size_t i = 0; i < bag.size(); ++i) {
            int cp = cpos(ls.bag_color[i]);
            if (cp >= 0) bag_used[cp] += 1;
          }
          for (const BoundedState* rp : it->second) {
            const BoundedState& rs = *rp;
            BoundedState s = ls;
            bool ok = true;
            for (int c = 0; c < nc && ok; ++c) {
              int total = ls.used[c] + rs.used[c] - bag_used[c];
              if (total > target.cap(target.c[c])) ok = false;
              s.used[c] = static_cast<uint8_t>(total);
            }
            if (!ok) continue;
            for (int v = 0; v < g.n(); ++v)
              if (rs.theta[v] >= 0) s.theta[v] = rs.theta[v];
            offer(out, std::move(s));
          }
        }
        tables[nd.child0].clear();
        tables[nd.child1].clear();
        break;
      }
    }
  }

  const Table& root = tables[nice.root];
  const BoundedState* best = nullptr;
  for (const auto& [key, s] : root) {
    (void)key;
    if (!best || s.theta < best->theta) best = &s;
  }
  if (!best) return std::nullopt;
  Coloring out;
  out.theta.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    out.theta[v] = best->theta[v];
    if (vset::contains(target.c, best->theta[v])) out.exceptional.push_back(v);
  }
  return out;
}

namespace {

// bipartite pipeline of Theorem 5.1: reduce, replace large components by
// two adjacent vertices, solve bounded, lift back
std::optional<Coloring> solve_bipartite(const ColoredGraph& g,
                                        const HomTarget& target,
                                        const ListAssignment& lists) {
  int k = target.total_cap();
  VertexSet cpp = hck_reduce_bipartite(g, target, lists, k);

  struct Replaced {
    VertexSet x_side, y_side;  // original ids
  };
  std::vector<Replaced> reps;
  std::vector<VertexSet> singles;
  for (const auto& comp : components_without(g, cpp)) {
    if (comp.size() == 1) {
      singles.push_back(comp);
      continue;
    }
    auto sub = induced_subgraph(g, comp);
    auto coloring = bipartite_2coloring(sub.graph);
    assert(coloring);
    Replaced r;
    for (int v : coloring->b_side) r.x_side.push_back(sub.origin[v]);
    for (int v : coloring->w_side) r.y_side.push_back(sub.origin[v]);
    r.x_side = vset::sorted_unique(std::move(r.x_side));
    r.y_side = vset::sorted_unique(std::move(r.y_side));
    reps.push_back(std::move(r));
  }

  // G' layout: C'' first (sorted), then singletons, then x_i,y_i pairs
  std::vector<int> gp_of(g.n(), -1);
  int next = 0;
  for (int v : cpp) gp_of[v] = next++;
  for (const auto& s : singles) gp_of[s[0]] = next++;
  std::vector<std::pair<int, int>> rep_ids;
  for (size_t i = 0; i < reps.size(); ++i) {
    rep_ids.emplace_back(next, next + 1);
    next += 2;
  }
  ColoredGraph gp(next);
  ListAssignment gp_lists(next);
  for (int v : cpp) gp_lists[gp_of[v]] = lists[v];
  for (const auto& s : singles) gp_lists[gp_of[s[0]]] = lists[s[0]];
  // edges among kept vertices
  for (const auto& [u, v, c] : g.edges()) {
    if (c != EdgeColor::Black) continue;
    if (gp_of[u] >= 0 && gp_of[v] >= 0) gp.add_edge(gp_of[u], gp_of[v]);
  }
  VertexSet bw{std::min(target.b, target.w), std::max(target.b, target.w)};
  for (size_t i = 0; i < reps.size(); ++i) {
    auto [xi, yi] = rep_ids[i];
    gp.add_edge(xi, yi);
    VertexSet xl = bw, yl = bw;
    for (int v : reps[i].x_side) xl = vset::intersect(xl, lists[v]);
    for (int v : reps[i].y_side) yl = vset::intersect(yl, lists[v]);
    gp_lists[xi] = xl;
    gp_lists[yi] = yl;
    VertexSet xn, yn;
    for (int v : reps[i].x_side)
      for (const auto& [w, c] : g.neighbors(v)) {
        if (c != EdgeColor::Black) continue;
        if (gp_of[w] >= 0 && vset::contains(cpp, w)) vset::insert(xn, gp_of[w]);
      }
    for (int v : reps[i].y_side)
      for (const auto& [w, c] : g.neighbors(v)) {
        if (c != EdgeColor::Black) continue;
        if (gp_of[w] >= 0 && vset::contains(cpp, w)) vset::insert(yn, gp_of[w]);
      }
    for (int w : xn) gp.add_edge(xi, w);
    for (int w : yn)
      if (!gp.has_edge(yi, w)) gp.add_edge(yi, w);
  }
  for (auto& l : gp_lists)
    if (l.empty()) return std::nullopt;

  NiceDecomposition nice = make_nice(decompose(gp));
  auto sol = hck_solve_bounded(gp, target, gp_lists, k, nice);
  if (!sol) return std::nullopt;

  Coloring out;
  out.theta.assign(g.n(), -1);
  for (int v : cpp) out.theta[v] = sol->theta[gp_of[v]];
  for (const auto& s : singles) out.theta[s[0]] = sol->theta[gp_of[s[0]]];
  for (size_t i = 0; i < reps.size(); ++i) {
    for (int v : reps[i].x_side) out.theta[v] = sol->theta[rep_ids[i].first];
    for (int v : reps[i].y_side) out.theta[v] = sol->theta[rep_ids[i].second];
  }
  for (int v = 0; v < g.n(); ++v)
    if (vset::contains(target.c, out.theta[v])) out.exceptional.push_back(v);
  return out;
}

}  // namespace

std::optional<Coloring> hck_solve(const ColoredGraph& g,
                                  const HomTarget& target,
                                  const ListAssignment& lists) {
  if (static_cast<int>(lists.size()) != g.n())
    throw std::invalid_argument("list assignment size mismatch");
  for (const auto& l : lists)
    if (l.empty()) return std::nullopt;
  int k = target.total_cap();

  if (is_black_bipartite(g)) {
    auto res = solve_bipartite(g, target, lists);
    if (res) assert(valid_coloring(g, target, lists, res->theta));
    return res;
  }

  auto s_oct = oct(g, k);
  if (!s_oct) return std::nullopt;
  const VertexSet& sprime = *s_oct;
  int sn = static_cast<int>(sprime.size());

  VertexSet rest = [&] {
    VertexSet all;
    for (int v = 0; v < g.n(); ++v) all.push_back(v);
    return vset::difference(all, sprime);
  }();
  auto sub = induced_subgraph(g, rest);
  std::vector<int> local(g.n(), -1);
  for (size_t i = 0; i < rest.size(); ++i) local[rest[i]] = (int)i;

  std::vector<int> assign(sn, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < sn && ok; ++i) {
      if (!vset::contains(lists[sprime[i]], assign[i])) ok = false;
      for (int j = i + 1; j < sn && ok; ++j)
        if (g.has_black_edge(sprime[i], sprime[j]) &&
            !target.adjacent(assign[i], assign[j]))
          ok = false;
    }
    if (ok) {
      // update caps and neighbor lists, then solve the bipartite rest
      std::map<int, int> caps = target.caps;
      for (int i = 0; i < sn && ok; ++i) {
        auto it = caps.find(assign[i]);
        if (it != caps.end()) {
          if (it->second == 0) ok = false;
          else it->second -= 1;
        }
      }
      if (ok) {
        HomTarget t2 = target;
        t2.caps = caps;
        ListAssignment sub_lists(rest.size());
        bool feasible = true;
        for (size_t i = 0; i < rest.size() && feasible; ++i) {
          VertexSet l;
          for (int u : lists[rest[i]]) {
            bool allowed = true;
            for (int j = 0; j < sn; ++j)
              if (g.has_black_edge(rest[i], sprime[j]) &&
                  !target.adjacent(assign[j], u)) {
                allowed = false;
                break;
              }
            if (allowed) l.push_back(u);
          }
          sub_lists[i] = l;
          if (l.empty()) feasible = false;
        }
        if (feasible) {
          auto res = solve_bipartite(sub.graph, t2, sub_lists);
          if (res) {
            Coloring out;
            out.theta.assign(g.n(), -1);
            for (int i = 0; i < sn; ++i) out.theta[sprime[i]] = assign[i];
            for (size_t i = 0; i < rest.size(); ++i)
              out.theta[rest[i]] = res->theta[i];
            for (int v = 0; v < g.n(); ++v)
              if (vset::contains(target.c, out.theta[v]))
                out.exceptional.push_back(v);
            assert(valid_coloring(g, target, lists, out.theta));
            return out;
          }
        }
      }
    }
    int i = 0;
    while (i < sn && assign[i] == target.h_n - 1) assign[i++] = 0;
    if (i == sn) break;
    ++assign[i];
  }
  return std::nullopt;
}

}  // namespace sepred
