#include "propb/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace propb {

int Graph::num_edges() const {
  int k = 0;
  for (int u = 0; u < num_vertices; ++u)
    for (int v = u + 1; v < num_vertices; ++v)
      if (adj[u][v]) ++k;
  return k;
}

Graph make_graph(int num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.num_vertices = num_vertices;
  g.adj.assign(num_vertices, std::vector<char>(num_vertices, 0));
  return g;
}

void add_edge(Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (u < 0 || v < 0 || u >= g.num_vertices || v >= g.num_vertices)
    throw std::invalid_argument("vertex out of range");
  g.adj[u][v] = g.adj[v][u] = 1;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  Graph g = make_graph(n);
  for (int i = 0; i < n; ++i) add_edge(g, i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g = make_graph(n);
  for (int i = 0; i + 1 < n; ++i) add_edge(g, i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g = make_graph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) add_edge(g, u, v);
  return g;
}

Graph read_graph(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("empty graph file");
  std::istringstream head(lines[0]);
  int nv = 0, ne = 0, n = 0;
  if (!(head >> nv >> ne >> n) || n != 2)
    throw std::invalid_argument("bad graph header (need n = 2)");
  if (static_cast<int>(lines.size()) != ne + 1)
    throw std::invalid_argument("edge count mismatch");
  Graph g = make_graph(nv);
  for (int i = 1; i <= ne; ++i) {
    std::istringstream es(lines[i]);
    int u, v;
    if (!(es >> u >> v)) throw std::invalid_argument("bad edge line");
    if (g.adjacent(u, v)) throw std::invalid_argument("duplicate edge");
    add_edge(g, u, v);
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices << ' ' << g.num_edges() << " 2\n";
  for (int u = 0; u < g.num_vertices; ++u)
    for (int v = u + 1; v < g.num_vertices; ++v)
      if (g.adjacent(u, v)) out << u << ' ' << v << '\n';
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

}  // namespace propb
