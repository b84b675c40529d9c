#include "sepred/graphio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sepred {

ColoredGraph read_graph(std::istream& in) {
  std::string line;
  bool have_header = false;
  int n = 0, m = 0, edges_seen = 0;
  ColoredGraph g;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw std::invalid_argument("duplicate p line");
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("bad p line");
      g = ColoredGraph(n);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw std::invalid_argument("e line before p line");
      int u, v;
      if (!(ls >> u >> v)) throw std::invalid_argument("bad e line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw std::invalid_argument("vertex id out of range");
      g.add_edge(u - 1, v - 1);
      ++edges_seen;
    } else if (tag == "l") {
      if (!have_header) throw std::invalid_argument("l line before p line");
      int v, label;
      if (!(ls >> v >> label)) throw std::invalid_argument("bad l line");
      if (v < 1 || v > n) throw std::invalid_argument("vertex id out of range");
      g.set_vertex_label(v - 1, label);
    } else {
      throw std::invalid_argument("unknown line tag: " + tag);
    }
  }
  if (!have_header) throw std::invalid_argument("missing p line");
  if (edges_seen != m)
    throw std::invalid_argument("edge count does not match header");
  return g;
}

ColoredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_graph(in);
}

ColoredGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const ColoredGraph& g) {
  out << "p " << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v, c] : g.edges()) {
    (void)c;
    out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  }
  for (int v = 0; v < g.n(); ++v)
    if (g.vertex_label(v) != 0)
      out << "l " << (v + 1) << ' ' << g.vertex_label(v) << '\n';
}

std::string format_graph(const ColoredGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace sepred
