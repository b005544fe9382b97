#include "propb/chromatic.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace propb {

namespace {

// Edges grouped by their largest vertex; an edge can only become
// monochromatic when its last vertex is assigned.
std::vector<std::vector<int>> edges_by_max(const Hypergraph& h) {
  std::vector<std::vector<int>> by_max(h.num_vertices);
  for (int i = 0; i < h.num_edges(); ++i)
    by_max[h.edges[i].back()].push_back(i);
  return by_max;
}

bool extend(const Hypergraph& h, const std::vector<std::vector<int>>& by_max,
            std::vector<int>& colors, int v, int r, int used) {
  if (v == h.num_vertices) return true;
  // symmetry breaking: a fresh color is interchangeable with any other
  // fresh color, so allow at most one new one
  int limit = std::min(r, used + 1);
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    for (int ei : by_max[v]) {
      const Edge& e = h.edges[ei];
      bool mono = true;
      for (int u : e)
        if (u != v && colors[u] != c) {
          mono = false;
          break;
        }
      if (mono) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    colors[v] = c;
    if (extend(h, by_max, colors, v + 1, r, std::max(used, c))) return true;
  }
  colors[v] = 0;
  return false;
}

}  // namespace

bool is_r_colorable(const Hypergraph& h, int r) {
  if (r < 1) return false;
  if (h.edges.empty()) return true;
  auto by_max = edges_by_max(h);
  std::vector<int> colors(h.num_vertices, 0);
  return extend(h, by_max, colors, 0, r, 0);
}

int chromatic_number(const Hypergraph& h, int vertex_cap) {
  if (h.num_vertices > vertex_cap)
    throw std::runtime_error("chromatic_number: vertex cap exceeded");
  if (h.edges.empty()) return 1;
  for (int r = 1;; ++r)
    if (is_r_colorable(h, r)) return r;
}

}  // namespace propb
