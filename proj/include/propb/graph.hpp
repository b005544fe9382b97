#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace propb {

/// Simple undirected graph, dense adjacency matrix.
struct Graph {
  int num_vertices = 0;
  std::vector<std::vector<char>> adj;

  bool adjacent(int u, int v) const { return adj[u][v] != 0; }
  int num_edges() const;
};

Graph make_graph(int num_vertices);
void add_edge(Graph& g, int u, int v);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);

// Same text format as hypergraphs with n = 2.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace propb
