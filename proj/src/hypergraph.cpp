#include "propb/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "propb/bigint.hpp"

namespace propb {

Hypergraph make_hypergraph(int num_vertices, int uniformity,
                           std::vector<Edge> edges) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  if (uniformity < 2) throw std::invalid_argument("uniformity must be >= 2");
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != uniformity)
      throw std::invalid_argument("edge of wrong size");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("repeated vertex in edge");
    if (e.front() < 0 || e.back() >= num_vertices)
      throw std::invalid_argument("vertex id out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  Hypergraph h;
  h.num_vertices = num_vertices;
  h.uniformity = uniformity;
  h.edges = std::move(edges);
  return h;
}

LinearOrder identity_order(int num_vertices) {
  LinearOrder ord(num_vertices);
  std::iota(ord.begin(), ord.end(), 0);
  return ord;
}

std::vector<int> order_positions(const LinearOrder& ord) {
  std::vector<int> pos(ord.size(), -1);
  for (int i = 0; i < static_cast<int>(ord.size()); ++i) {
    if (ord[i] < 0 || ord[i] >= static_cast<int>(ord.size()) || pos[ord[i]] != -1)
      throw std::invalid_argument("order is not a permutation");
    pos[ord[i]] = i;
  }
  return pos;
}

static bool edge_monochromatic(const Edge& e, const std::vector<int>& colors) {
  int c = colors[e.front()];
  for (int v : e)
    if (colors[v] != c) return false;
  return true;
}

bool is_proper(const Hypergraph& h, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != h.num_vertices)
    throw std::invalid_argument("coloring/hypergraph dimension mismatch");
  for (const auto& e : h.edges)
    if (edge_monochromatic(e, c.colors)) return false;
  return true;
}

int count_monochromatic(const Hypergraph& h, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != h.num_vertices)
    throw std::invalid_argument("coloring/hypergraph dimension mismatch");
  int k = 0;
  for (const auto& e : h.edges)
    if (edge_monochromatic(e, c.colors)) ++k;
  return k;
}

Hypergraph complete_hypergraph(int v, int n) {
  if (v < n) throw std::invalid_argument("complete_hypergraph: v < n");
  std::vector<Edge> edges;
  Edge cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    edges.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == v - n + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return make_hypergraph(v, n, std::move(edges));
}

Hypergraph fano_plane() {
  return make_hypergraph(7, 3,
                         {{0, 1, 2},
                          {0, 3, 4},
                          {0, 5, 6},
                          {1, 3, 5},
                          {1, 4, 6},
                          {2, 3, 6},
                          {2, 4, 5}});
}

Hypergraph single_chain(int n, int r) {
  if (n < 2 || r < 1) throw std::invalid_argument("single_chain: n>=2, r>=1");
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) {
    Edge e(n);
    std::iota(e.begin(), e.end(), i * (n - 1));
    edges.push_back(std::move(e));
  }
  return make_hypergraph((n - 1) * r + 1, n, std::move(edges));
}

Hypergraph random_hypergraph(int v, int m, int n, std::uint64_t seed) {
  if (v < n || m < 0) throw std::invalid_argument("random_hypergraph: bad parameters");
  if (BigInt(m) > binomial(v, n))
    throw std::invalid_argument("random_hypergraph: m exceeds C(v,n)");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, v - 1);
  std::set<Edge> chosen;
  while (static_cast<int>(chosen.size()) < m) {
    std::set<int> verts;
    while (static_cast<int>(verts.size()) < n) verts.insert(pick(rng));
    chosen.emplace(verts.begin(), verts.end());
  }
  return make_hypergraph(v, n, {chosen.begin(), chosen.end()});
}

Hypergraph read_hypergraph(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("empty hypergraph file");
  std::istringstream head(lines[0]);
  int nv = 0, ne = 0, n = 0;
  if (!(head >> nv >> ne >> n))
    throw std::invalid_argument("bad hypergraph header");
  if (static_cast<int>(lines.size()) != ne + 1)
    throw std::invalid_argument("edge count mismatch");
  std::vector<Edge> edges;
  for (int i = 1; i <= ne; ++i) {
    std::istringstream es(lines[i]);
    Edge e(n);
    for (int j = 0; j < n; ++j)
      if (!(es >> e[j])) throw std::invalid_argument("bad edge line");
    int extra;
    if (es >> extra) throw std::invalid_argument("trailing data on edge line");
    edges.push_back(std::move(e));
  }
  return make_hypergraph(nv, n, std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.num_vertices << ' ' << h.num_edges() << ' ' << h.uniformity << '\n';
  for (const auto& e : h.edges) {
    for (int j = 0; j < h.uniformity; ++j) out << (j ? " " : "") << e[j];
    out << '\n';
  }
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hypergraph(in);
}

}  // namespace propb
