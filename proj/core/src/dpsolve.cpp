#include "sepred/dpsolve.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sepred {

ConstraintSpec ConstraintSpec::any() {
  ConstraintSpec s;
  s.kind_ = SpecKind::Any;
  return s;
}

ConstraintSpec ConstraintSpec::connected_black() {
  ConstraintSpec s;
  s.kind_ = SpecKind::ConnectedBlack;
  return s;
}

namespace {

void verify_hereditary(
    const std::unordered_set<CanonicalGraph, CanonicalGraphHash>& members) {
  for (const auto& m : members) {
    ColoredGraph g = from_canonical(m);
    for (int drop = 0; drop < g.n(); ++drop) {
      VertexSet keep;
      for (int v = 0; v < g.n(); ++v)
        if (v != drop) keep.push_back(v);
      CanonicalGraph sub = canonicalize(induced_subgraph(g, keep).graph);
      if (!members.count(sub))
        throw std::invalid_argument(
            "class is not hereditary: a member has a non-member induced "
            "subgraph");
    }
  }
}

}  // namespace

ConstraintSpec ConstraintSpec::hereditary_from_oracle(
    const std::function<bool(const ColoredGraph&)>& member, int max_vertices) {
  if (max_vertices > 6)
    throw std::invalid_argument(
        "hereditary class compilation is limited to 6 vertices");
  ConstraintSpec s;
  s.kind_ = SpecKind::Hereditary;
  for (const auto& c : all_graphs_up_to(std::max(0, max_vertices)))
    if (member(from_canonical(c))) s.members_.insert(c);
  verify_hereditary(s.members_);
  return s;
}

ConstraintSpec ConstraintSpec::hereditary_from_members(
    std::vector<CanonicalGraph> members) {
  ConstraintSpec s;
  s.kind_ = SpecKind::Hereditary;
  s.members_.insert(members.begin(), members.end());
  verify_hereditary(s.members_);
  return s;
}

ConstraintSpec ConstraintSpec::edgeless(int max_vertices) {
  ConstraintSpec s;
  s.kind_ = SpecKind::Hereditary;
  for (int n = 0; n <= max_vertices; ++n) {
    CanonicalGraph c;
    c.n = static_cast<uint8_t>(n);
    s.members_.insert(c);
  }
  return s;
}

ConstraintSpec ConstraintSpec::clique(int max_vertices) {
  ConstraintSpec s;
  s.kind_ = SpecKind::Hereditary;
  for (int n = 0; n <= max_vertices; ++n) {
    CanonicalGraph c;
    c.n = static_cast<uint8_t>(n);
    for (int i = 0; i < n; ++i)
      c.adj[i] = static_cast<uint16_t>(((1u << n) - 1) & ~(1u << i));
    s.members_.insert(c);
  }
  return s;
}

std::vector<CanonicalGraph> ConstraintSpec::members_sorted() const {
  std::vector<CanonicalGraph> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end(), [](const CanonicalGraph& a,
                                       const CanonicalGraph& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.adj != b.adj) return a.adj < b.adj;
    return a.label < b.label;
  });
  return out;
}

namespace {

constexpr uint8_t kNone = 0xFF;

// committed solution graph: black adjacency over the chosen vertices found
// so far, boundary slots tagged with their bag position
struct SmallG {
  uint8_t n = 0;
  std::array<uint16_t, kCanonMaxVertices> adj{};
  std::array<uint8_t, kCanonMaxVertices> label{};
  std::array<int8_t, kCanonMaxVertices> bpos{};  // bag position or -1

  int slot_of_bpos(int p) const {
    for (int i = 0; i < n; ++i)
      if (bpos[i] == p) return i;
    return -1;
  }
};

struct State {
  uint32_t chosen = 0;               // bag positions of chosen vertices
  std::vector<uint8_t> block_of;     // per bag position; kNone when chosen
  std::vector<uint32_t> touch;       // per connectivity block
  uint32_t satisfied = 0;            // uncut pairs already witnessed
  SmallG graph;                      // hereditary only
  std::vector<uint8_t> cblock_of;    // per bag position; kNone when unchosen
  int ncblock = 0;
  bool closed = false;               // a finished black component exists
  int size = 0;
  VertexSet chosen_set;
};

bool better(const State& a, const State& b) {
  if (a.size != b.size) return a.size < b.size;
  return a.chosen_set < b.chosen_set;
}

// canonical context shared by all nodes
struct Ctx {
  const ColoredGraph* g;
  const ConstraintSpec* spec;
  int k = 0;
  int ncut = 0, nuncut = 0;
  std::vector<uint32_t> class_mask;  // per vertex
  std::vector<char> forbidden;
  uint32_t all_uncut = 0;
  size_t states = 0;

  bool fatal(uint32_t mask) const {
    uint32_t both = mask & (mask >> 1) & 0x55555555u;
    return (both & ((1u << (2 * ncut)) - 1)) != 0;
  }

  uint32_t sealed_uncut(uint32_t mask) const {
    uint32_t both = mask & (mask >> 1) & 0x55555555u;
    uint32_t out = 0;
    for (int j = 0; j < nuncut; ++j)
      if (both & (1u << (2 * (ncut + j)))) out |= (1u << j);
    return out;
  }
};

// renormalize block ids to first-appearance order over bag positions
void normalize_blocks(std::vector<uint8_t>& block_of,
                      std::vector<uint32_t>& touch) {
  std::vector<int> remap(touch.size() + 1, -1);
  std::vector<uint32_t> new_touch;
  for (auto& b : block_of) {
    if (b == kNone) continue;
    if (remap[b] == -1) {
      remap[b] = static_cast<int>(new_touch.size());
      new_touch.push_back(touch[b]);
    }
    b = static_cast<uint8_t>(remap[b]);
  }
  touch = std::move(new_touch);
}

void normalize_cblocks(std::vector<uint8_t>& cblock_of, int& ncblock) {
  std::vector<int> remap(ncblock + 1, -1);
  int next = 0;
  for (auto& b : cblock_of) {
    if (b == kNone) continue;
    if (remap[b] == -1) remap[b] = next++;
    b = static_cast<uint8_t>(remap[b]);
  }
  ncblock = next;
}

std::string state_key(const Ctx& ctx, const State& s) {
  std::string key;
  key.reserve(16 + s.block_of.size() + 4 * s.touch.size() + 40);
  auto put32 = [&key](uint32_t x) {
    key.push_back(static_cast<char>(x & 0xFF));
    key.push_back(static_cast<char>((x >> 8) & 0xFF));
    key.push_back(static_cast<char>((x >> 16) & 0xFF));
    key.push_back(static_cast<char>((x >> 24) & 0xFF));
  };
  put32(s.chosen);
  key.append(s.block_of.begin(), s.block_of.end());
  for (uint32_t t : s.touch) put32(t);
  put32(s.satisfied);
  switch (ctx.spec->kind()) {
    case SpecKind::Any:
      break;
    case SpecKind::ConnectedBlack:
      key.append(s.cblock_of.begin(), s.cblock_of.end());
      key.push_back(s.closed ? 1 : 0);
      break;
    case SpecKind::Hereditary: {
      // boundary slots pinned by unique colors, interior permutable within
      // label classes
      std::array<int, kCanonMaxVertices> color{};
      for (int i = 0; i < s.graph.n; ++i)
        color[i] = s.graph.bpos[i] >= 0 ? s.graph.bpos[i]
                                        : 64 + s.graph.label[i];
      auto rows = canonical_adjacency(s.graph.n, s.graph.adj, color);
      std::array<int, kCanonMaxVertices> sorted_colors = color;
      std::sort(sorted_colors.begin(), sorted_colors.begin() + s.graph.n);
      key.push_back(static_cast<char>(s.graph.n));
      for (int i = 0; i < s.graph.n; ++i) {
        put32(static_cast<uint32_t>(sorted_colors[i]));
        put32(rows[i]);
      }
      break;
    }
  }
  return key;
}

using Table = std::unordered_map<std::string, State>;

void emit(const Ctx& ctx, Table& table, State&& s) {
  std::string key = state_key(ctx, s);
  auto it = table.find(key);
  if (it == table.end())
    table.emplace(std::move(key), std::move(s));
  else if (better(s, it->second))
    it->second = std::move(s);
}

// membership test for the committed graph (labels only, boundary ignored)
bool graph_in_spec(const Ctx& ctx, const SmallG& sg) {
  std::array<int, kCanonMaxVertices> color{};
  for (int i = 0; i < sg.n; ++i) color[i] = sg.label[i];
  CanonicalGraph c;
  c.n = sg.n;
  c.adj = canonical_adjacency(sg.n, sg.adj, color);
  std::array<uint8_t, kCanonMaxVertices> lab{};
  for (int i = 0; i < sg.n; ++i) lab[i] = sg.label[i];
  std::sort(lab.begin(), lab.begin() + sg.n);
  c.label = lab;
  return ctx.spec->contains(c);
}

// index of v in a sorted bag, or -1
int bag_pos(const VertexSet& bag, int v) {
  auto it = std::lower_bound(bag.begin(), bag.end(), v);
  if (it == bag.end() || *it != v) return -1;
  return static_cast<int>(it - bag.begin());
}

void do_leaf(const Ctx& ctx, Table& out) {
  State s;
  emit(ctx, out, std::move(s));
}

void do_introduce(Ctx& ctx, const Table& child, const VertexSet& child_bag,
                  const VertexSet& bag, int v, Table& out) {
  int pv = bag_pos(bag, v);
  std::vector<int> remap(child_bag.size());
  for (size_t i = 0; i < child_bag.size(); ++i)
    remap[i] = bag_pos(bag, child_bag[i]);

  const ColoredGraph& g = *ctx.g;
  for (const auto& [key, cs] : child) {
    (void)key;
    // common re-indexing into the parent bag
    State base;
    base.satisfied = cs.satisfied;
    base.size = cs.size;
    base.chosen_set = cs.chosen_set;
    base.touch = cs.touch;
    base.block_of.assign(bag.size(), kNone);
    base.cblock_of.assign(bag.size(), kNone);
    base.ncblock = cs.ncblock;
    base.closed = cs.closed;
    base.graph = cs.graph;
    base.chosen = 0;
    for (size_t i = 0; i < child_bag.size(); ++i) {
      if (cs.chosen & (1u << i)) base.chosen |= (1u << remap[i]);
      base.block_of[remap[i]] = cs.block_of[i];
      base.cblock_of[remap[i]] = cs.cblock_of[i];
    }
    for (int sl = 0; sl < base.graph.n; ++sl)
      if (base.graph.bpos[sl] >= 0)
        base.graph.bpos[sl] =
            static_cast<int8_t>(remap[base.graph.bpos[sl]]);

    // branch: v stays out of the solution
    {
      State s = base;
      int nb = static_cast<int>(s.touch.size());
      s.block_of[pv] = static_cast<uint8_t>(nb);
      s.touch.push_back(ctx.class_mask[v]);
      // union with blocks of adjacent unchosen bag vertices (any color)
      std::vector<int> find(nb + 1);
      for (int i = 0; i <= nb; ++i) find[i] = i;
      std::function<int(int)> root = [&](int x) {
        while (find[x] != x) x = find[x] = find[find[x]];
        return x;
      };
      bool ok = true;
      for (size_t p = 0; p < bag.size(); ++p) {
        if (static_cast<int>(p) == pv || s.block_of[p] == kNone) continue;
        if (!g.has_edge(v, bag[p])) continue;
        int a = root(s.block_of[p]), b = root(nb);
        if (a != b) find[std::max(a, b)] = std::min(a, b);
      }
      std::vector<uint32_t> merged(nb + 1, 0);
      for (int i = 0; i <= nb; ++i) merged[root(i)] |= s.touch[i];
      for (int i = 0; i <= nb && ok; ++i)
        if (root(i) == i && ctx.fatal(merged[i])) ok = false;
      if (ok) {
        for (auto& b : s.block_of)
          if (b != kNone) b = static_cast<uint8_t>(root(b));
        for (int i = 0; i <= nb; ++i) s.touch[i] = merged[root(i)];
        normalize_blocks(s.block_of, s.touch);
        emit(ctx, out, std::move(s));
      }
    }

    // branch: v joins the solution
    if (!ctx.forbidden[v] && cs.size + 1 <= ctx.k) {
      State s = base;
      s.chosen |= (1u << pv);
      s.size += 1;
      vset::insert(s.chosen_set, v);
      bool ok = true;
      if (ctx.spec->kind() == SpecKind::Hereditary) {
        SmallG& sg = s.graph;
        if (sg.n >= kCanonMaxVertices) continue;
        int slot = sg.n++;
        sg.label[slot] = static_cast<uint8_t>(g.vertex_label(v));
        sg.bpos[slot] = static_cast<int8_t>(pv);
        for (int other = 0; other < slot; ++other) {
          int bp = sg.bpos[other];
          if (bp < 0) continue;
          if (g.has_black_edge(v, bag[bp])) {
            sg.adj[slot] |= static_cast<uint16_t>(1u << other);
            sg.adj[other] |= static_cast<uint16_t>(1u << slot);
          }
        }
        ok = graph_in_spec(ctx, sg);
      } else if (ctx.spec->kind() == SpecKind::ConnectedBlack) {
        if (s.closed) continue;  // a finished component already exists
        int nb = s.ncblock;
        s.cblock_of[pv] = static_cast<uint8_t>(nb);
        s.ncblock += 1;
        std::vector<int> find(nb + 1);
        for (int i = 0; i <= nb; ++i) find[i] = i;
        std::function<int(int)> root = [&](int x) {
          while (find[x] != x) x = find[x] = find[find[x]];
          return x;
        };
        for (size_t p = 0; p < bag.size(); ++p) {
          if (static_cast<int>(p) == pv || s.cblock_of[p] == kNone) continue;
          if (!g.has_black_edge(v, bag[p])) continue;
          int a = root(s.cblock_of[p]), b = root(nb);
          if (a != b) find[std::max(a, b)] = std::min(a, b);
        }
        for (auto& b : s.cblock_of)
          if (b != kNone) b = static_cast<uint8_t>(root(b));
        normalize_cblocks(s.cblock_of, s.ncblock);
      }
      if (ok) emit(ctx, out, std::move(s));
    }
  }
}

void do_forget(Ctx& ctx, const Table& child, const VertexSet& child_bag,
               const VertexSet& bag, int v, Table& out) {
  int cv = bag_pos(child_bag, v);
  std::vector<int> remap(child_bag.size(), -1);
  for (size_t i = 0; i < child_bag.size(); ++i)
    if (static_cast<int>(i) != cv) remap[i] = bag_pos(bag, child_bag[i]);

  for (const auto& [key, cs] : child) {
    (void)key;
    State s;
    s.satisfied = cs.satisfied;
    s.size = cs.size;
    s.chosen_set = cs.chosen_set;
    s.touch = cs.touch;
    s.block_of.assign(bag.size(), kNone);
    s.cblock_of.assign(bag.size(), kNone);
    s.ncblock = cs.ncblock;
    s.closed = cs.closed;
    s.graph = cs.graph;
    s.chosen = 0;
    for (size_t i = 0; i < child_bag.size(); ++i) {
      if (static_cast<int>(i) == cv) continue;
      if (cs.chosen & (1u << i)) s.chosen |= (1u << remap[i]);
      s.block_of[remap[i]] = cs.block_of[i];
      s.cblock_of[remap[i]] = cs.cblock_of[i];
    }
    for (int sl = 0; sl < s.graph.n; ++sl) {
      if (s.graph.bpos[sl] == cv)
        s.graph.bpos[sl] = -1;
      else if (s.graph.bpos[sl] >= 0)
        s.graph.bpos[sl] = static_cast<int8_t>(remap[s.graph.bpos[sl]]);
    }

    if (cs.chosen & (1u << cv)) {
      if (ctx.spec->kind() == SpecKind::ConnectedBlack) {
        int b = cs.cblock_of[cv];
        bool alive = false;
        for (size_t i = 0; i < child_bag.size(); ++i)
          if (static_cast<int>(i) != cv && cs.cblock_of[i] == b) alive = true;
        if (!alive) {
          // component finished: legal only if it is the whole solution
          if (cs.ncblock > 1 || cs.closed) continue;
          s.closed = true;
        }
        normalize_cblocks(s.cblock_of, s.ncblock);
      }
      emit(ctx, out, std::move(s));
    } else {
      int b = cs.block_of[cv];
      bool alive = false;
      for (size_t i = 0; i < child_bag.size(); ++i)
        if (static_cast<int>(i) != cv && cs.block_of[i] == b) alive = true;
      if (!alive) s.satisfied |= ctx.sealed_uncut(cs.touch[b]);
      normalize_blocks(s.block_of, s.touch);
      emit(ctx, out, std::move(s));
    }
  }
}

void do_join(Ctx& ctx, const Table& left, const Table& right,
             const VertexSet& bag, Table& out) {
  const ColoredGraph& g = *ctx.g;
  (void)g;
  std::unordered_map<uint32_t, std::vector<const State*>> rbucket;
  for (const auto& [key, rs] : right) {
    (void)key;
    rbucket[rs.chosen].push_back(&rs);
  }
  int bagpop = 0;
  for (const auto& [key, ls] : left) {
    (void)key;
    auto it = rbucket.find(ls.chosen);
    if (it == rbucket.end()) continue;
    bagpop = __builtin_popcount(ls.chosen);
    for (const State* rp : it->second) {
      const State& rs = *rp;
      int size = ls.size + rs.size - bagpop;
      if (size > ctx.k) continue;

      State s;
      s.chosen = ls.chosen;
      s.size = size;
      s.chosen_set = vset::unite(ls.chosen_set, rs.chosen_set);
      if (static_cast<int>(s.chosen_set.size()) != size) continue;
      s.satisfied = ls.satisfied | rs.satisfied;
      s.block_of.assign(bag.size(), kNone);
      s.cblock_of.assign(bag.size(), kNone);

      // connectivity blocks: union-find across the two partitions
      int la = static_cast<int>(ls.touch.size());
      int ra = static_cast<int>(rs.touch.size());
      std::vector<int> find(la + ra);
      for (int i = 0; i < la + ra; ++i) find[i] = i;
      std::function<int(int)> root = [&](int x) {
        while (find[x] != x) x = find[x] = find[find[x]];
        return x;
      };
      for (size_t p = 0; p < bag.size(); ++p) {
        if (ls.block_of[p] == kNone) continue;
        int a = root(ls.block_of[p]), b = root(la + rs.block_of[p]);
        if (a != b) find[std::max(a, b)] = std::min(a, b);
      }
      std::vector<uint32_t> merged(la + ra, 0);
      for (int i = 0; i < la; ++i) merged[root(i)] |= ls.touch[i];
      for (int i = 0; i < ra; ++i) merged[root(la + i)] |= rs.touch[i];
      bool ok = true;
      for (int i = 0; i < la + ra && ok; ++i)
        if (root(i) == i && ctx.fatal(merged[i])) ok = false;
      if (!ok) continue;
      s.touch.assign(la + ra, 0);
      for (size_t p = 0; p < bag.size(); ++p) {
        if (ls.block_of[p] == kNone) continue;
        int r = root(ls.block_of[p]);
        s.block_of[p] = static_cast<uint8_t>(r);
        s.touch[r] = merged[r];
      }
      normalize_blocks(s.block_of, s.touch);

      if (ctx.spec->kind() == SpecKind::Hereditary) {
#ifndef NDEBUG
        // no black edge may join vertices forgotten in different branches
        // (guaranteed by the edge-cover condition)
        const VertexSet shared = vset::intersect(ls.chosen_set, rs.chosen_set);
        for (int u : vset::difference(ls.chosen_set, shared))
          for (int w : vset::difference(rs.chosen_set, shared))
            assert(!g.has_black_edge(u, w));
#endif
        // merge committed graphs over the shared boundary
        SmallG sg = ls.graph;
        std::array<int, kCanonMaxVertices> slot_map{};
        bool fits = true;
        for (int rs_slot = 0; rs_slot < rs.graph.n; ++rs_slot) {
          int bp = rs.graph.bpos[rs_slot];
          if (bp >= 0) {
            int l_slot = sg.slot_of_bpos(bp);
            assert(l_slot >= 0);
            slot_map[rs_slot] = l_slot;
          } else {
            if (sg.n >= kCanonMaxVertices) {
              fits = false;
              break;
            }
            slot_map[rs_slot] = sg.n;
            sg.label[sg.n] = rs.graph.label[rs_slot];
            sg.bpos[sg.n] = -1;
            sg.n += 1;
          }
        }
        if (!fits) continue;
        for (int a = 0; a < rs.graph.n; ++a)
          for (int b = a + 1; b < rs.graph.n; ++b)
            if (rs.graph.adj[a] & (1u << b)) {
              sg.adj[slot_map[a]] |=
                  static_cast<uint16_t>(1u << slot_map[b]);
              sg.adj[slot_map[b]] |=
                  static_cast<uint16_t>(1u << slot_map[a]);
            }
        if (!graph_in_spec(ctx, sg)) continue;
        s.graph = sg;
      } else if (ctx.spec->kind() == SpecKind::ConnectedBlack) {
        if (ls.closed && rs.size > 0) continue;
        if (rs.closed && ls.size > 0) continue;
        s.closed = ls.closed || rs.closed;
        int lc = ls.ncblock, rc = rs.ncblock;
        std::vector<int> cfind(lc + rc);
        for (int i = 0; i < lc + rc; ++i) cfind[i] = i;
        std::function<int(int)> croot = [&](int x) {
          while (cfind[x] != x) x = cfind[x] = cfind[cfind[x]];
          return x;
        };
        for (size_t p = 0; p < bag.size(); ++p) {
          if (ls.cblock_of[p] == kNone) continue;
          int a = croot(ls.cblock_of[p]), b = croot(lc + rs.cblock_of[p]);
          if (a != b) cfind[std::max(a, b)] = std::min(a, b);
        }
        for (size_t p = 0; p < bag.size(); ++p) {
          if (ls.cblock_of[p] == kNone) continue;
          s.cblock_of[p] = static_cast<uint8_t>(croot(ls.cblock_of[p]));
        }
        s.ncblock = lc + rc;
        normalize_cblocks(s.cblock_of, s.ncblock);
      }
      emit(ctx, out, std::move(s));
    }
  }
}

}  // namespace

std::optional<VertexSet> solve(const ColoredGraph& g,
                               const NiceDecomposition& nice,
                               const SeparationDemand& demand, int k,
                               const ConstraintSpec& spec,
                               const VertexSet& forbidden,
                               SolveStats* stats) {
  if (auto err = validate_nice(g, nice))
    throw std::invalid_argument("invalid decomposition: " + *err);
  if (k < 0) return std::nullopt;
  size_t npairs = demand.cut_pairs.size() + demand.uncut_pairs.size();
  if (npairs > 16) throw std::invalid_argument("too many demand pairs");

  Ctx ctx;
  ctx.g = &g;
  ctx.spec = &spec;
  ctx.k = std::min(k, g.n());
  ctx.ncut = static_cast<int>(demand.cut_pairs.size());
  ctx.nuncut = static_cast<int>(demand.uncut_pairs.size());
  ctx.class_mask.assign(g.n(), 0);
  ctx.all_uncut = ctx.nuncut == 0 ? 0 : ((1u << ctx.nuncut) - 1);
  for (int i = 0; i < ctx.ncut; ++i) {
    for (int v : demand.cut_pairs[i].first) {
      g.check_vertex(v);
      ctx.class_mask[v] |= (1u << (2 * i));
    }
    for (int v : demand.cut_pairs[i].second) {
      g.check_vertex(v);
      ctx.class_mask[v] |= (1u << (2 * i + 1));
    }
  }
  for (int j = 0; j < ctx.nuncut; ++j) {
    for (int v : demand.uncut_pairs[j].first) {
      g.check_vertex(v);
      ctx.class_mask[v] |= (1u << (2 * (ctx.ncut + j)));
    }
    for (int v : demand.uncut_pairs[j].second) {
      g.check_vertex(v);
      ctx.class_mask[v] |= (1u << (2 * (ctx.ncut + j) + 1));
    }
  }
  ctx.forbidden.assign(g.n(), 0);
  for (int v : forbidden) {
    g.check_vertex(v);
    ctx.forbidden[v] = 1;
  }

  for (const auto& nd : nice.nodes)
    if (nd.bag.size() > 32)
      throw std::invalid_argument("decomposition too wide for the DP");

  // bottom-up over the rooted nice decomposition
  std::vector<Table> tables(nice.nodes.size());
  std::vector<int> stack{nice.root};
  std::vector<int> order;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    const auto& nd = nice.nodes[u];
    if (nd.child0 >= 0) stack.push_back(nd.child0);
    if (nd.child1 >= 0) stack.push_back(nd.child1);
  }
  std::reverse(order.begin(), order.end());
  using Kind = NiceDecomposition::Kind;
  for (int u : order) {
    const auto& nd = nice.nodes[u];
    Table& out = tables[u];
    switch (nd.kind) {
      case Kind::Leaf:
        do_leaf(ctx, out);
        break;
      case Kind::Introduce:
        do_introduce(ctx, tables[nd.child0], nice.nodes[nd.child0].bag,
                     nd.bag, nd.vertex, out);
        tables[nd.child0].clear();
        break;
      case Kind::Forget:
        do_forget(ctx, tables[nd.child0], nice.nodes[nd.child0].bag, nd.bag,
                  nd.vertex, out);
        tables[nd.child0].clear();
        break;
      case Kind::Join:
        do_join(ctx, tables[nd.child0], tables[nd.child1], nd.bag, out);
        tables[nd.child0].clear();
        tables[nd.child1].clear();
        break;
    }
    ctx.states += out.size();
  }

  if (stats) stats->dp_states = ctx.states;

  // membership of nonempty solutions is maintained at every introduce and
  // join; the empty solution still needs its own check
  bool empty_ok = true;
  if (spec.kind() == SpecKind::Hereditary)
    empty_ok = spec.contains(CanonicalGraph{});

  const Table& root = tables[nice.root];
  const State* best = nullptr;
  for (const auto& [key, s] : root) {
    (void)key;
    if ((s.satisfied & ctx.all_uncut) != ctx.all_uncut) continue;
    if (s.size == 0 && !empty_ok) continue;
    if (!best || better(s, *best)) best = &s;
  }
  if (!best) return std::nullopt;
  return best->chosen_set;
}

}  // namespace sepred
