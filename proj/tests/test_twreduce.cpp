#include <doctest.h>

#include <functional>
#include <stdexcept>

#include <random>

#include "sepred/flow.hpp"
#include "sepred/oracle.hpp"
#include "sepred/twreduce.hpp"
#include "test_support.hpp"

using namespace sepred;
using namespace sepred::testing;

TEST_CASE("cover_minimal_separators on a path") {
  ColoredGraph g = path_graph(3);
  auto cover = cover_minimal_separators(g, 0, 2, 1);
  CHECK(vset::contains(cover, 1));
}

TEST_CASE("cover_minimal_separators on two disjoint paths") {
  ColoredGraph g = disjoint_paths(2, 3);
  auto c2 = cover_minimal_separators(g, 0, 1, 2);
  CHECK(vset::is_subset(oracle::brute_minimal_separator_union(g, 0, 1, 2), c2));

  auto c3 = cover_minimal_separators(g, 0, 1, 3);
  CHECK(vset::is_subset(oracle::brute_minimal_separator_union(g, 0, 1, 3), c3));
}

TEST_CASE("cover_minimal_separators preconditions") {
  ColoredGraph g = path_graph(2);
  CHECK_THROWS_AS(cover_minimal_separators(g, 0, 1, 3),
                  std::invalid_argument);  // adjacent
  ColoredGraph h = disjoint_paths(2, 1);   // min cut 2
  CHECK_THROWS_AS(cover_minimal_separators(h, 0, 1, 1),
                  std::invalid_argument);  // cut exceeds k
  ColoredGraph d(3);
  d.add_edge(0, 2);
  CHECK(cover_minimal_separators(d, 0, 1, 2).empty());  // disconnected
}

TEST_CASE("coverage invariant on random graphs") {
  std::mt19937_64 rng(41);
  int done = 0;
  for (int iter = 0; done < 200; ++iter) {
    int n = 4 + static_cast<int>(rng() % 7);  // up to 10
    ColoredGraph g = random_graph(n, 0.3, rng);
    int k = 1 + static_cast<int>(rng() % 4);
    if (g.has_edge(0, 1)) continue;
    auto cut = min_vertex_cut(g, 0, 1, k);
    if (!cut) continue;
    ++done;
    auto cover = cover_minimal_separators(g, 0, 1, k);
    CHECK_FALSE(vset::contains(cover, 0));
    CHECK_FALSE(vset::contains(cover, 1));
    auto brute = oracle::brute_minimal_separator_union(g, 0, 1, k);
    CHECK(vset::is_subset(brute, cover));
  }
}

TEST_CASE("reduce_terminals keeps retained edges identical") {
  // property (4): G*[C u T] isomorphic to G[C u T] through the identity of
  // retained ids
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 80; ++iter) {
    int n = 4 + static_cast<int>(rng() % 5);
    ColoredGraph g = random_graph(n, 0.35, rng);
    int k = 1 + static_cast<int>(rng() % 3);
    ReductionResult rr = reduce_terminals(g, {0, 1}, k);
    for (size_t u = 0; u < rr.origin_map.size(); ++u)
      for (size_t v = u + 1; v < rr.origin_map.size(); ++v) {
        int ou = rr.origin_map[u], ov = rr.origin_map[v];
        if (ou == kSubdivision || ov == kSubdivision) continue;
        CHECK(rr.reduced.has_edge(static_cast<int>(u), static_cast<int>(v)) ==
              g.has_edge(ou, ov));
      }
  }
}

TEST_CASE("reduce_terminals on a small graph is edge-identical") {
  ColoredGraph g = path_graph(3);
  ReductionResult rr = reduce_terminals(g, {0, 2}, 2);
  CHECK(rr.reduced.n() == static_cast<int>(rr.origin_map.size()));
  for (size_t v = 0; v < rr.origin_map.size(); ++v)
    CHECK(rr.origin_map[v] != kSubdivision);
}

TEST_CASE("reduce_terminals on a star with leaf terminals") {
  // star center 0, leaves 1..7; terminals 1 and 2; the only minimal
  // separator is the center
  ColoredGraph g = star_graph(7);
  ReductionResult rr = reduce_terminals(g, {1, 2}, 1);
  CHECK(rr.cover == VertexSet{0});
  CHECK(rr.reduced_id(1) >= 0);
  CHECK(rr.reduced_id(2) >= 0);
  CHECK(rr.reduced_id(0) >= 0);
  // retained star edges survive unsubdivided
  CHECK(rr.reduced.has_edge(rr.reduced_id(0), rr.reduced_id(1)));
  CHECK(rr.reduced.has_edge(rr.reduced_id(0), rr.reduced_id(2)));
}

TEST_CASE("theorem 2.15 property (2): minimal separators coincide") {
  std::mt19937_64 rng(47);
  int done = 0;
  for (int iter = 0; done < 60; ++iter) {
    int n = 4 + static_cast<int>(rng() % 6);  // up to 9
    ColoredGraph g = random_graph(n, 0.3, rng);
    int k = 1 + static_cast<int>(rng() % 3);
    if (g.has_edge(0, 1)) continue;
    if (!min_vertex_cut(g, 0, 1, k)) continue;
    ++done;
    ReductionResult rr = reduce_terminals(g, {0, 1}, k);
    int rs = rr.reduced_id(0), rt = rr.reduced_id(1);

    // minimal separators of size <= k in G, mapped onto reduced ids
    auto list_minimal = [&](const ColoredGraph& h, int s, int t) {
      std::vector<VertexSet> out;
      VertexSet universe;
      for (int v = 0; v < h.n(); ++v)
        if (v != s && v != t) universe.push_back(v);
      int un = static_cast<int>(universe.size());
      std::function<void(int, VertexSet&)> rec = [&](int start, VertexSet& acc) {
        if (static_cast<int>(acc.size()) <= k &&
            is_separator(h, acc, {s}, {t})) {
          bool minimal = true;
          for (int v : acc)
            if (is_separator(h, vset::difference(acc, {v}), {s}, {t}))
              minimal = false;
          if (minimal) out.push_back(acc);
        }
        if (static_cast<int>(acc.size()) == k) return;
        for (int i = start; i < un; ++i) {
          acc.push_back(universe[i]);
          rec(i + 1, acc);
          acc.pop_back();
        }
      };
      VertexSet acc;
      rec(0, acc);
      return out;
    };

    auto in_g = list_minimal(g, 0, 1);
    auto in_reduced = list_minimal(rr.reduced, rs, rt);
    // map reduced separators to original ids; none may touch a subdivision
    std::vector<VertexSet> mapped;
    for (const auto& sep : in_reduced) {
      VertexSet m;
      bool ok = true;
      for (int v : sep) {
        if (rr.origin_map[v] == kSubdivision) ok = false;
        else m.push_back(rr.origin_map[v]);
      }
      CHECK(ok);
      if (ok) mapped.push_back(vset::sorted_unique(std::move(m)));
    }
    auto norm = [](std::vector<VertexSet> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(norm(in_g) == norm(mapped));
  }
}

TEST_CASE("cover_set_separators basics") {
  ColoredGraph g = path_graph(3);  // a-m-b
  auto cov = cover_set_separators(g, {0}, {2}, 1);
  REQUIRE(cov.has_value());
  CHECK(vset::contains(*cov, 1));

  // star: removing the center separates leaf pairs
  ColoredGraph star = star_graph(4);
  auto c = cover_set_separators(star, {1, 2}, {3, 4}, 1);
  REQUIRE(c.has_value());
  CHECK(vset::contains(*c, 0));

  // overlapping sets: the shared vertex must sit in every separating set,
  // and the super-terminal construction keeps it coverable
  ColoredGraph h = path_graph(3);
  auto overlap = cover_set_separators(h, {0, 1}, {1, 2}, 1);
  REQUIRE(overlap.has_value());
  CHECK(vset::contains(*overlap, 1));

  // singleton sides are separable by themselves (set semantics), so the
  // infeasible case needs larger sets: K4 halves cannot part with one vertex
  ColoredGraph k4 = complete_graph(4);
  CHECK_FALSE(cover_set_separators(k4, {0, 1}, {2, 3}, 1).has_value());
}

TEST_CASE("project_terminals") {
  std::mt19937_64 rng(53);
  // c = V: X* = x, Y* = y
  ColoredGraph g = random_graph(6, 0.4, rng);
  VertexSet all;
  for (int v = 0; v < 6; ++v) all.push_back(v);
  auto [xs, ys] = project_terminals(g, all, {0, 2}, {3});
  CHECK(xs == VertexSet{0, 2});
  CHECK(ys == VertexSet{3});

  // path x0-p-c0-q-y0 with c = {c0}: both projections equal {c0}
  ColoredGraph p = path_graph(5);
  auto [xs2, ys2] = project_terminals(p, {2}, {0}, {4});
  CHECK(xs2 == VertexSet{2});
  CHECK(ys2 == VertexSet{2});

  // x inside c implies x inside X*
  auto [xs3, ys3] = project_terminals(p, {0, 2}, {0}, {4});
  CHECK(vset::is_subset(VertexSet{0}, xs3));
  (void)ys3;

  CHECK_THROWS_AS(project_terminals(p, {}, {0}, {4}), std::invalid_argument);
}

TEST_CASE("separator_membership") {
  ColoredGraph g = path_graph(3);
  CHECK(separator_membership(g, 0, 2, 1) == VertexSet{1});

  // k below the minimum cut: empty
  ColoredGraph dp = disjoint_paths(2, 3);
  CHECK(separator_membership(dp, 0, 1, 1).empty());
  CHECK(separator_membership(dp, 0, 1, 2) == VertexSet{2, 3, 4, 5, 6, 7});
}

TEST_CASE("separator_membership equals the brute union and sits in the cover") {
  std::mt19937_64 rng(59);
  int done = 0;
  for (int iter = 0; done < 40; ++iter) {
    int n = 4 + static_cast<int>(rng() % 5);
    ColoredGraph g = random_graph(n, 0.3, rng);
    int k = 1 + static_cast<int>(rng() % 3);
    if (g.has_edge(0, 1)) continue;
    ++done;
    VertexSet membership = separator_membership(g, 0, 1, k);
    CHECK(membership == oracle::brute_minimal_separator_union(g, 0, 1, k));
    if (min_vertex_cut(g, 0, 1, k))
      CHECK(vset::is_subset(membership,
                            cover_minimal_separators(g, 0, 1, k)));
  }
}
