#include "cliutil.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sepred/matching.hpp"

namespace sepred::cli {

namespace {

std::optional<int> suffix_number(const std::string& s,
                                 const std::string& prefix) {
  if (s.rfind(prefix, 0) != 0) return std::nullopt;
  try {
    return std::stoi(s.substr(prefix.size()));
  } catch (...) {
    return std::nullopt;
  }
}

ConstraintSpec compile_predicate(
    const std::function<bool(const ColoredGraph&)>& pred, int max_vertices) {
  if (max_vertices > 6)
    throw std::invalid_argument(
        "class compilation needs member enumeration, limited to k <= 6");
  return ConstraintSpec::hereditary_from_oracle(pred, max_vertices);
}

}  // namespace

ClassSpec load_class(const std::string& spec, int max_vertices) {
  ClassSpec out;
  out.name = spec;
  if (spec == "all") {
    out.compiled = ConstraintSpec::any();
    out.predicate = [](const ColoredGraph&) { return true; };
    return out;
  }
  if (spec == "edgeless") {
    out.compiled = ConstraintSpec::edgeless(max_vertices);
    out.predicate = [](const ColoredGraph& g) { return g.edge_count() == 0; };
    return out;
  }
  if (spec == "clique") {
    out.compiled = ConstraintSpec::clique(max_vertices);
    out.predicate = [](const ColoredGraph& g) {
      return 2 * g.edge_count() == g.n() * (g.n() - 1);
    };
    return out;
  }
  if (spec == "matching") {
    out.predicate = [](const ColoredGraph& g) {
      for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 1) return false;
      return true;
    };
    out.compiled = compile_predicate(out.predicate, max_vertices);
    return out;
  }
  if (auto j = suffix_number(spec, "max-deficiency-")) {
    int jj = *j;
    out.predicate = [jj](const ColoredGraph& g) {
      return g.n() - matching_number_small(g) <= jj;
    };
    out.compiled = compile_predicate(out.predicate, max_vertices);
    return out;
  }
  if (auto j = suffix_number(spec, "rank-")) {
    int jj = *j;
    out.predicate = [jj](const ColoredGraph& g) {
      return g.n() - static_cast<int>(components(g).size()) <= jj;
    };
    out.compiled = compile_predicate(out.predicate, max_vertices);
    return out;
  }

  // file of member graphs
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("unknown class or unreadable file: " +
                                       spec);
  std::vector<CanonicalGraph> members;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int n;
    if (!(ls >> n)) continue;
    ColoredGraph g(n);
    int u, v;
    while (ls >> u >> v) g.add_edge(u - 1, v - 1);
    members.push_back(canonicalize(g));
  }
  out.compiled = ConstraintSpec::hereditary_from_members(members);
  out.predicate = [compiled = out.compiled](const ColoredGraph& g) {
    return g.n() <= kCanonMaxVertices && compiled.contains(canonicalize(g));
  };
  return out;
}

namespace {

VertexSet parse_ids(std::istringstream& ls, int n, const std::string& stop) {
  VertexSet out;
  std::string tok;
  while (ls >> tok) {
    if (tok == stop) break;
    int v = std::stoi(tok);
    if (v < 1 || v > n) throw std::invalid_argument("pair id out of range");
    out.push_back(v - 1);
  }
  return vset::sorted_unique(std::move(out));
}

}  // namespace

PairsFile load_pairs(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open pairs file: " + path);
  PairsFile out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    VertexSet x = parse_ids(ls, n, "|");
    VertexSet y = parse_ids(ls, n, "|");
    if (x.empty() || y.empty())
      throw std::invalid_argument("pair sides must be nonempty");
    if (kind == "cut")
      out.cut_pairs.emplace_back(x, y);
    else if (kind == "uncut")
      out.uncut_pairs.emplace_back(x, y);
    else
      throw std::invalid_argument("pair line must start with cut or uncut");
  }
  return out;
}

HckInstance load_hck_target(const std::string& path, int g_n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open target file: " + path);
  json j = json::parse(in);
  const auto& h = j.at("H");
  int hn = h.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : h.at("edges"))
    edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
  std::vector<int> loops;
  if (h.contains("loops"))
    for (const auto& l : h.at("loops")) loops.push_back(l.get<int>() - 1);
  VertexSet c;
  for (const auto& v : j.at("C")) c.push_back(v.get<int>() - 1);
  c = vset::sorted_unique(std::move(c));
  std::map<int, int> caps;
  for (const auto& [key, val] : j.at("K").items())
    caps[std::stoi(key) - 1] = val.get<int>();

  HckInstance out;
  out.target = HomTarget::make(hn, edges, loops, c, caps);
  if (j.contains("lists")) {
    const auto& ls = j.at("lists");
    if (static_cast<int>(ls.size()) != g_n)
      throw std::invalid_argument("lists size must match graph order");
    for (const auto& l : ls) {
      VertexSet lv;
      for (const auto& u : l) lv.push_back(u.get<int>() - 1);
      out.lists.push_back(vset::sorted_unique(std::move(lv)));
    }
  } else {
    out.lists = full_lists(out.target, g_n);
  }
  return out;
}

ColoredGraph gen_graph(int n, int m, double p, bool use_p, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::mt19937_64 rng(seed);
  ColoredGraph g(n);
  if (use_p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) g.add_edge(u, v);
    return g;
  }
  long max_m = static_cast<long>(n) * (n - 1) / 2;
  if (m > max_m) throw std::invalid_argument("too many edges requested");
  std::uniform_int_distribution<int> pick(0, n - 1);
  int added = 0;
  while (added < m) {
    int u = pick(rng), v = pick(rng);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    ++added;
  }
  return g;
}

json vertex_set_json(const VertexSet& s) {
  json out = json::array();
  for (int v : s) out.push_back(v + 1);
  return out;
}

json edge_list_json(const std::vector<std::pair<int, int>>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back({u + 1, v + 1});
  return out;
}

}  // namespace sepred::cli
