#include "sepred/tdecomp.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sepred {

int TreeDecomposition::width() const {
  size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

int NiceDecomposition::width() const {
  size_t w = 0;
  for (const auto& nd : nodes) w = std::max(w, nd.bag.size());
  return static_cast<int>(w) - 1;
}

std::optional<std::string> validate(const ColoredGraph& g,
                                    const TreeDecomposition& td) {
  int nb = static_cast<int>(td.bags.size());
  if (nb == 0) return "decomposition has no bags";
  for (const auto& [a, b] : td.edges)
    if (a < 0 || a >= nb || b < 0 || b >= nb) return "tree edge out of range";
  // must be a tree
  if (static_cast<int>(td.edges.size()) != nb - 1)
    return "tree has wrong edge count";
  std::vector<std::vector<int>> tadj(nb);
  for (const auto& [a, b] : td.edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  {
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++cnt;
      for (int w : tadj[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (cnt != nb) return "tree is disconnected";
  }

  // (1) vertex cover
  std::vector<char> covered(g.n(), 0);
  for (const auto& bag : td.bags)
    for (int v : bag) {
      if (v < 0 || v >= g.n()) return "bag vertex out of range";
      covered[v] = 1;
    }
  for (int v = 0; v < g.n(); ++v)
    if (!covered[v]) return "vertex cover violated";

  // (2) edge cover
  for (const auto& [u, v, c] : g.edges()) {
    (void)c;
    bool ok = false;
    for (const auto& bag : td.bags)
      if (vset::contains(bag, u) && vset::contains(bag, v)) {
        ok = true;
        break;
      }
    if (!ok) return "edge cover violated";
  }

  // (3) connectivity of occurrence
  for (int v = 0; v < g.n(); ++v) {
    int start = -1, total = 0;
    for (int i = 0; i < nb; ++i)
      if (vset::contains(td.bags[i], v)) {
        ++total;
        if (start == -1) start = i;
      }
    if (total == 0) continue;
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : tadj[u])
        if (!seen[w] && vset::contains(td.bags[w], v)) {
          seen[w] = 1;
          stack.push_back(w);
          ++cnt;
        }
    }
    if (cnt != total) return "occurrence connectivity violated";
  }
  return std::nullopt;
}

TreeDecomposition decompose(const ColoredGraph& g) {
  int n = g.n();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<std::set<int>> adj(n);
  for (const auto& [u, v, c] : g.edges()) {
    (void)c;
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> gone(n, 0);
  std::vector<int> elim_pos(n, -1);
  std::vector<VertexSet> bag_of(n);
  for (int round = 0; round < n; ++round) {
    // vertex whose elimination adds the fewest fill edges; lowest id wins
    int best = -1;
    long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
        for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
          if (!adj[*it].count(*jt)) ++fill;
      if (best == -1 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    int v = best;
    VertexSet bag{v};
    for (int w : adj[v]) bag.push_back(w);
    std::sort(bag.begin(), bag.end());
    bag_of[round] = bag;
    elim_pos[v] = round;
    for (int a : adj[v])
      for (int b : adj[v])
        if (a < b && !adj[a].count(b)) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
    for (int w : adj[v]) adj[w].erase(v);
    adj[v].clear();
    gone[v] = 1;
  }
  // bag(round) attaches to the bag of its earliest-eliminated remaining
  // neighbor; isolated tails become roots, chained together at the end
  td.bags = bag_of;
  std::vector<int> roots;
  for (int round = 0; round < n; ++round) {
    const VertexSet& bag = bag_of[round];
    int next = -1;
    for (int w : bag)
      if (elim_pos[w] > round && (next == -1 || elim_pos[w] < next))
        next = elim_pos[w];
    if (next == -1)
      roots.push_back(round);
    else
      td.edges.emplace_back(round, next);
  }
  for (size_t i = 1; i < roots.size(); ++i)
    td.edges.emplace_back(roots[0], roots[i]);
  return td;
}

namespace {

struct NiceBuilder {
  NiceDecomposition out;

  int add(NiceDecomposition::Kind kind, int vertex, VertexSet bag, int c0,
          int c1) {
    out.nodes.push_back({kind, vertex, std::move(bag), c0, c1});
    return static_cast<int>(out.nodes.size()) - 1;
  }

  // chain from an existing node up to `target` bag: forget extras, then
  // introduce the missing ones
  int lift(int node, const VertexSet& target) {
    VertexSet cur = out.nodes[node].bag;
    for (int v : vset::difference(cur, target)) {
      cur = vset::difference(cur, {v});
      node = add(NiceDecomposition::Kind::Forget, v, cur, node, -1);
    }
    for (int v : vset::difference(target, cur)) {
      vset::insert(cur, v);
      node = add(NiceDecomposition::Kind::Introduce, v, cur, node, -1);
    }
    return node;
  }

  // fresh leaf-to-bag introduce chain
  int grow(const VertexSet& target) {
    int node = add(NiceDecomposition::Kind::Leaf, -1, {}, -1, -1);
    return lift(node, target);
  }
};

}  // namespace

NiceDecomposition make_nice(const TreeDecomposition& td) {
  int nb = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> tadj(nb);
  for (const auto& [a, b] : td.edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  for (auto& l : tadj) std::sort(l.begin(), l.end());

  NiceBuilder nb_;
  // iterative post-order from bag 0
  std::vector<int> parent(nb, -2);
  std::vector<int> order;
  {
    std::vector<int> stack{0};
    parent[0] = -1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (int w : tadj[u])
        if (parent[w] == -2) {
          parent[w] = u;
          stack.push_back(w);
        }
    }
  }
  std::vector<int> built(nb, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    std::vector<int> kids;
    for (int w : tadj[u])
      if (parent[w] == u) kids.push_back(built[w]);
    if (kids.empty()) {
      built[u] = nb_.grow(td.bags[u]);
      continue;
    }
    int cur = nb_.lift(kids[0], td.bags[u]);
    for (size_t i = 1; i < kids.size(); ++i) {
      int rhs = nb_.lift(kids[i], td.bags[u]);
      cur = nb_.add(NiceDecomposition::Kind::Join, -1, td.bags[u], cur, rhs);
    }
    built[u] = cur;
  }
  nb_.out.root = nb_.lift(built[0], {});
  return nb_.out;
}

std::optional<std::string> validate_nice(const ColoredGraph& g,
                                         const NiceDecomposition& nice) {
  if (nice.nodes.empty() || nice.root < 0) return "empty nice decomposition";
  if (!nice.nodes[nice.root].bag.empty()) return "root bag not empty";
  using Kind = NiceDecomposition::Kind;
  for (const auto& nd : nice.nodes) {
    switch (nd.kind) {
      case Kind::Leaf:
        if (!nd.bag.empty() || nd.child0 != -1) return "bad leaf node";
        break;
      case Kind::Introduce: {
        if (nd.child0 < 0 || nd.child1 != -1) return "bad introduce arity";
        const auto& cb = nice.nodes[nd.child0].bag;
        if (!vset::contains(nd.bag, nd.vertex) ||
            vset::difference(nd.bag, cb) != VertexSet{nd.vertex})
          return "introduce does not add exactly one vertex";
        break;
      }
      case Kind::Forget: {
        if (nd.child0 < 0 || nd.child1 != -1) return "bad forget arity";
        const auto& cb = nice.nodes[nd.child0].bag;
        if (vset::contains(nd.bag, nd.vertex) ||
            vset::difference(cb, nd.bag) != VertexSet{nd.vertex})
          return "forget does not drop exactly one vertex";
        break;
      }
      case Kind::Join:
        if (nd.child0 < 0 || nd.child1 < 0) return "bad join arity";
        if (nice.nodes[nd.child0].bag != nd.bag ||
            nice.nodes[nd.child1].bag != nd.bag)
          return "join children bags differ";
        break;
    }
  }
  // reuse the plain validator on the underlying decomposition
  TreeDecomposition td;
  for (const auto& nd : nice.nodes) td.bags.push_back(nd.bag);
  for (size_t i = 0; i < nice.nodes.size(); ++i) {
    if (nice.nodes[i].child0 >= 0)
      td.edges.emplace_back(static_cast<int>(i), nice.nodes[i].child0);
    if (nice.nodes[i].child1 >= 0)
      td.edges.emplace_back(static_cast<int>(i), nice.nodes[i].child1);
  }
  return validate(g, td);
}

void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n
      << '\n';
  for (size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << (i + 1);
    for (int v : td.bags[i]) out << ' ' << (v + 1);
    out << '\n';
  }
  for (const auto& [a, b] : td.edges)
    out << (a + 1) << ' ' << (b + 1) << '\n';
}

TreeDecomposition read_td(std::istream& in) {
  TreeDecomposition td;
  std::string line;
  int nbags = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "s") {
      std::string td_tag;
      int w, n;
      if (!(ls >> td_tag >> nbags >> w >> n) || td_tag != "td")
        throw std::invalid_argument("bad s line in td file");
      td.bags.resize(nbags);
    } else if (tag == "b") {
      int id;
      if (nbags < 0 || !(ls >> id) || id < 1 || id > nbags)
        throw std::invalid_argument("bad b line in td file");
      int v;
      VertexSet bag;
      while (ls >> v) bag.push_back(v - 1);
      td.bags[id - 1] = vset::sorted_unique(std::move(bag));
    } else {
      int a = std::stoi(tag), b;
      if (!(ls >> b)) throw std::invalid_argument("bad edge line in td file");
      td.edges.emplace_back(a - 1, b - 1);
    }
  }
  if (nbags < 0) throw std::invalid_argument("missing s line in td file");
  return td;
}

std::string format_td(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  write_td(out, td, n);
  return out.str();
}

}  // namespace sepred
