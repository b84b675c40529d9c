#include <doctest.h>

#include <stdexcept>

#include <functional>
#include <random>

#include "sepred/torso.hpp"
#include "test_support.hpp"

using namespace sepred;
using namespace sepred::testing;

namespace {

bool same_graph(const ColoredGraph& a, const ColoredGraph& b) {
  return a.n() == b.n() && a.edges() == b.edges();
}

}  // namespace

TEST_CASE("torso on the full vertex set is the identity") {
  std::mt19937_64 rng(3);
  ColoredGraph g = random_graph(6, 0.5, rng);
  VertexSet all;
  for (int v = 0; v < g.n(); ++v) all.push_back(v);
  auto tr = torso(g, all);
  CHECK(same_graph(tr.graph, g));
}

TEST_CASE("torso of a star on its leaves is a red clique") {
  ColoredGraph g = star_graph(5);
  VertexSet leaves{1, 2, 3, 4, 5};
  auto tr = torso(g, leaves);
  CHECK(tr.graph.n() == 5);
  CHECK(tr.graph.edge_count() == 10);
  for (const auto& [u, v, c] : tr.graph.edges()) {
    (void)u;
    (void)v;
    CHECK(c == EdgeColor::Red);
  }
}

TEST_CASE("torso of a path endpoint pair is one red edge") {
  ColoredGraph g = path_graph(4);  // a-x-y-b
  auto tr = torso(g, {0, 3});
  CHECK(tr.graph.n() == 2);
  REQUIRE(tr.graph.edge_count() == 1);
  CHECK(tr.graph.edge_color(0, 1) == EdgeColor::Red);
}

TEST_CASE("torso composition, subgraph and separator preservation") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 3 + static_cast<int>(rng() % 6);  // up to 8
    ColoredGraph g = random_graph(n, 0.4, rng);
    VertexSet c2, c1;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 != 0) c2.push_back(v);
    for (int v : c2)
      if (rng() % 3 != 0) c1.push_back(v);

    auto t2 = torso(g, c2);
    // map c1 into t2's ids
    VertexSet c1_local;
    for (size_t i = 0; i < t2.origin.size(); ++i)
      if (vset::contains(c1, t2.origin[i]))
        c1_local.push_back(static_cast<int>(i));
    auto composed = torso(t2.graph, c1_local);
    auto direct = torso(g, c1);
    CHECK(same_graph(composed.graph, direct.graph));

    // subgraph property: torso(g\S, C\S) subgraph of torso(g,C)\S
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (rng() % 4 == 0) s.push_back(v);
    VertexSet rest;
    for (int v = 0; v < n; ++v)
      if (!vset::contains(s, v)) rest.push_back(v);
    auto gs = induced_subgraph(g, rest);
    VertexSet c2_minus_local;
    for (size_t i = 0; i < gs.origin.size(); ++i)
      if (vset::contains(c2, gs.origin[i]))
        c2_minus_local.push_back(static_cast<int>(i));
    auto left = torso(gs.graph, c2_minus_local);
    for (const auto& [u, v, color] : left.graph.edges()) {
      (void)color;
      int ou = gs.origin[left.origin[u]];
      int ov = gs.origin[left.origin[v]];
      // the same pair must be adjacent in torso(g, c2)
      int lu = -1, lv = -1;
      for (size_t i = 0; i < t2.origin.size(); ++i) {
        if (t2.origin[i] == ou) lu = static_cast<int>(i);
        if (t2.origin[i] == ov) lv = static_cast<int>(i);
      }
      REQUIRE(lu >= 0);
      REQUIRE(lv >= 0);
      CHECK(t2.graph.has_edge(lu, lv));
    }

    // separator preservation for S inside C1, pairs a,b in C1
    if (c1.size() >= 2) {
      for (int trial = 0; trial < 10; ++trial) {
        VertexSet sep;
        for (int v : c1)
          if (rng() % 3 == 0 && sep.size() < 3) sep.push_back(v);
        int a = c1[rng() % c1.size()];
        int b = c1[rng() % c1.size()];
        if (a == b) continue;
        auto t1 = torso(g, c1);
        auto to_local = [&](const VertexSet& src, const VertexSet& origin) {
          VertexSet out;
          for (size_t i = 0; i < origin.size(); ++i)
            if (vset::contains(src, origin[i]))
              out.push_back(static_cast<int>(i));
          return out;
        };
        int la = to_local({a}, t1.origin)[0];
        int lb = to_local({b}, t1.origin)[0];
        bool in_torso = is_separator(t1.graph, to_local(sep, t1.origin), {la},
                                     {lb});
        bool in_g = is_separator(g, sep, {a}, {b});
        CHECK(in_torso == in_g);
      }
    }
  }
}

TEST_CASE("component neighborhoods are cliques in the torso") {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 4 + static_cast<int>(rng() % 5);
    ColoredGraph g = random_graph(n, 0.35, rng);
    VertexSet c;
    for (int v = 0; v < n; ++v)
      if (rng() % 2 == 0) c.push_back(v);
    auto tr = torso(g, c);
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < tr.origin.size(); ++i)
      local[tr.origin[i]] = static_cast<int>(i);
    for (const auto& comp : components_without(g, c)) {
      VertexSet nb = neighborhood(g, comp);
      for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
          CHECK(tr.graph.has_edge(local[nb[i]], local[nb[j]]));
    }
  }
}
