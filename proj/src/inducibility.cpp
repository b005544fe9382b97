#include "propb/inducibility.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace propb {

namespace {

int hyperedge_intersection(const Edge& a, const Edge& b) {
  int i = 0, j = 0, k = 0;
  while (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else {
      ++k;
      ++i;
      ++j;
    }
  }
  return k;
}

// Extends an induced path by a vertex adjacent to the tail and non-adjacent
// to everything before it. Full paths are counted from their smaller
// endpoint so each unordered path contributes once.
std::int64_t extend_path(const Graph& g, std::vector<int>& path,
                         std::vector<char>& in_path, int r) {
  int tail = path.back();
  if (static_cast<int>(path.size()) == r)
    return path.front() < tail ? 1 : 0;
  std::int64_t total = 0;
  for (int w = 0; w < g.num_vertices; ++w) {
    if (in_path[w] || !g.adjacent(tail, w)) continue;
    bool induced = true;
    for (int k = 0; k + 1 < static_cast<int>(path.size()); ++k)
      if (g.adjacent(path[k], w)) {
        induced = false;
        break;
      }
    if (!induced) continue;
    path.push_back(w);
    in_path[w] = 1;
    total += extend_path(g, path, in_path, r);
    in_path[w] = 0;
    path.pop_back();
  }
  return total;
}

std::int64_t paths_from(const Graph& g, int start, int r) {
  std::vector<int> path{start};
  std::vector<char> in_path(g.num_vertices, 0);
  in_path[start] = 1;
  return extend_path(g, path, in_path, r);
}

void check_path_args(const Graph& g, int r, int vertex_cap) {
  if (r < 2) throw std::invalid_argument("path length must be >= 2");
  if (g.num_vertices > vertex_cap)
    throw std::runtime_error("count_induced_paths: vertex cap exceeded");
}

}  // namespace

Graph aux_graph(const Hypergraph& h) {
  Graph g = make_graph(h.num_edges());
  for (int i = 0; i < h.num_edges(); ++i)
    for (int j = i + 1; j < h.num_edges(); ++j)
      if (hyperedge_intersection(h.edges[i], h.edges[j]) == 1)
        add_edge(g, i, j);
  return g;
}

namespace serial {
std::int64_t count_induced_paths(const Graph& g, int r, int vertex_cap) {
  check_path_args(g, r, vertex_cap);
  std::int64_t total = 0;
  for (int start = 0; start < g.num_vertices; ++start)
    total += paths_from(g, start, r);
  return total;
}
}  // namespace serial

std::int64_t count_induced_paths(const Graph& g, int r, int vertex_cap) {
  check_path_args(g, r, vertex_cap);
  std::int64_t total = 0;
  int nv = g.num_vertices;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (int start = 0; start < nv; ++start) total += paths_from(g, start, r);
  return total;
}

double pg_bound(int nv, int r) {
  if (nv < 0 || r < 2) throw std::invalid_argument("pg_bound: nv >= 0, r >= 2");
  return nv / 2.0 * std::pow(static_cast<double>(nv) / (r - 1), r - 1);
}

double chain_bound(int m, int r) { return pg_bound(m, r); }

Graph blowup(int r, int k, int vertex_cap) {
  if (r < 3 || k < 1) throw std::invalid_argument("blowup: r >= 3, k >= 1");
  double size = std::pow(static_cast<double>(r + 1), k);
  if (size > vertex_cap) throw std::runtime_error("blowup: vertex cap exceeded");
  if (k == 1) return cycle_graph(r + 1);
  Graph inner = blowup(r, k - 1, vertex_cap);
  int block = inner.num_vertices;
  Graph g = make_graph(block * (r + 1));
  for (int copy = 0; copy <= r; ++copy) {
    int base = copy * block;
    for (int u = 0; u < block; ++u)
      for (int v = u + 1; v < block; ++v)
        if (inner.adjacent(u, v)) add_edge(g, base + u, base + v);
    // complete join to the next copy around the cycle
    int nbase = ((copy + 1) % (r + 1)) * block;
    for (int u = 0; u < block; ++u)
      for (int v = 0; v < block; ++v) add_edge(g, base + u, nbase + v);
  }
  return g;
}

Rational example_formula(int r, int k) {
  if (r < 3 || k < 1) throw std::invalid_argument("example_formula: r >= 3, k >= 1");
  BigInt n = ipow(BigInt(r + 1), k);
  Rational total = 0;
  BigInt n_pow_r = ipow(n, r);
  for (int i = 1; i <= k; ++i)
    total += Rational(n_pow_r, ipow(BigInt(r + 1), i * (r - 1)));
  return total;
}

}  // namespace propb
