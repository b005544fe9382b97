#include "propb/chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace propb {

namespace {

int intersection_size(const Edge& a, const Edge& b) {
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

std::vector<std::vector<int>> intersection_matrix(const Hypergraph& h) {
  int m = h.num_edges();
  std::vector<std::vector<int>> mat(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) {
    mat[i][i] = static_cast<int>(h.edges[i].size());  // repeats are not chains
    for (int j = i + 1; j < m; ++j)
      mat[i][j] = mat[j][i] = intersection_size(h.edges[i], h.edges[j]);
  }
  return mat;
}

// Extends seq by one edge until length r; counts or collects completions.
void dfs_chains(const std::vector<std::vector<int>>& mat, int m, int r,
                std::vector<int>& seq, std::int64_t& count,
                std::vector<std::vector<int>>* out) {
  if (static_cast<int>(seq.size()) == r) {
    ++count;
    if (out) out->push_back(seq);
    return;
  }
  for (int j = 0; j < m; ++j) {
    if (mat[seq.back()][j] != 1) continue;
    bool ok = true;
    for (int k = 0; k + 1 < static_cast<int>(seq.size()); ++k)
      if (mat[seq[k]][j] != 0) {
        ok = false;
        break;
      }
    if (ok) {
      seq.push_back(j);
      dfs_chains(mat, m, r, seq, count, out);
      seq.pop_back();
    }
  }
}

void check_chain_args(const Hypergraph& h, int r, int edge_cap) {
  if (r < 2) throw std::invalid_argument("chain length must be >= 2");
  if (h.num_edges() > edge_cap)
    throw std::runtime_error("count_chains: edge cap exceeded");
}

}  // namespace

bool is_chain(const Hypergraph& h, const std::vector<int>& seq) {
  for (int i : seq)
    if (i < 0 || i >= h.num_edges())
      throw std::invalid_argument("is_chain: edge index out of range");
  int r = static_cast<int>(seq.size());
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int want = (j - i == 1) ? 1 : 0;
      if (intersection_size(h.edges[seq[i]], h.edges[seq[j]]) != want)
        return false;
    }
  return true;
}

std::vector<std::vector<int>> enumerate_chains(const Hypergraph& h, int r,
                                               int edge_cap) {
  check_chain_args(h, r, edge_cap);
  auto mat = intersection_matrix(h);
  std::vector<std::vector<int>> out;
  std::int64_t count = 0;
  std::vector<int> seq;
  for (int first = 0; first < h.num_edges(); ++first) {
    seq.assign(1, first);
    dfs_chains(mat, h.num_edges(), r, seq, count, &out);
  }
  return out;
}

namespace serial {
std::int64_t count_chains(const Hypergraph& h, int r, ChainMode mode,
                          int edge_cap) {
  check_chain_args(h, r, edge_cap);
  auto mat = intersection_matrix(h);
  std::int64_t count = 0;
  std::vector<int> seq;
  for (int first = 0; first < h.num_edges(); ++first) {
    seq.assign(1, first);
    dfs_chains(mat, h.num_edges(), r, seq, count, nullptr);
  }
  // every chain set yields exactly two directed sequences (the reversal of a
  // chain is a chain and differs as a sequence)
  return mode == ChainMode::sequences ? count : count / 2;
}
}  // namespace serial

std::int64_t count_chains(const Hypergraph& h, int r, ChainMode mode,
                          int edge_cap) {
  check_chain_args(h, r, edge_cap);
  auto mat = intersection_matrix(h);
  int m = h.num_edges();
  std::int64_t count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (int first = 0; first < m; ++first) {
    std::int64_t local = 0;
    std::vector<int> seq(1, first);
    dfs_chains(mat, m, r, seq, local, nullptr);
    count += local;
  }
  return mode == ChainMode::sequences ? count : count / 2;
}

bool is_ordered_chain(const Hypergraph& h, const std::vector<int>& seq,
                      const LinearOrder& ord) {
  if (!is_chain(h, seq))
    throw std::invalid_argument("is_ordered_chain: sequence is not a chain");
  auto pos = order_positions(ord);
  // consecutive interval checks suffice: positions within an edge lie
  // between its min and max, and the intervals must be weakly increasing
  for (int i = 0; i + 1 < static_cast<int>(seq.size()); ++i) {
    int max_i = -1, min_j = h.num_vertices;
    for (int v : h.edges[seq[i]]) max_i = std::max(max_i, pos[v]);
    for (int v : h.edges[seq[i + 1]]) min_j = std::min(min_j, pos[v]);
    if (max_i > min_j) return false;
  }
  return true;
}

bool has_ordered_chain(const Hypergraph& h, const LinearOrder& ord, int r,
                       int edge_cap) {
  for (const auto& seq : enumerate_chains(h, r, edge_cap))
    if (is_ordered_chain(h, seq, ord)) return true;
  return false;
}

Rational ordered_chain_probability(int n, int r) {
  if (n < 2 || r < 2)
    throw std::invalid_argument("ordered_chain_probability: n,r >= 2");
  BigInt num = factorial(n - 1) * factorial(n - 1) *
               ipow(factorial(n - 2), r - 2);
  BigInt den = factorial((n - 1) * r + 1);
  return Rational(num, den);
}

GreedyResult greedy_color(const Hypergraph& h, const LinearOrder& ord, int r) {
  auto pos = order_positions(ord);
  if (static_cast<int>(ord.size()) != h.num_vertices)
    throw std::invalid_argument("greedy_color: order/hypergraph mismatch");
  // edges indexed by their order-maximal vertex
  std::vector<std::vector<int>> ending_at(h.num_vertices);
  for (int i = 0; i < h.num_edges(); ++i) {
    int best = h.edges[i].front();
    for (int v : h.edges[i])
      if (pos[v] > pos[best]) best = v;
    ending_at[best].push_back(i);
  }
  std::vector<int> colors(h.num_vertices, 0);
  for (int t = 0; t < h.num_vertices; ++t) {
    int v = ord[t];
    int chosen = 0;
    for (int c = 1; c <= r; ++c) {
      bool blocked = false;
      for (int ei : ending_at[v]) {
        bool mono = true;
        for (int u : h.edges[ei])
          if (u != v && colors[u] != c) {
            mono = false;
            break;
          }
        if (mono) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        chosen = c;
        break;
      }
    }
    if (chosen == 0) {
      GreedyResult res;
      res.failed_vertex = v;
      return res;
    }
    colors[v] = chosen;
  }
  GreedyResult res;
  res.coloring = Coloring{r, std::move(colors)};
  return res;
}

namespace {

struct OrderSearch {
  const Hypergraph& h;
  std::vector<std::vector<int>> chains;        // directed sequences
  std::vector<std::uint32_t> chain_masks;      // vertex set per chain
  std::vector<std::vector<int>> by_vertex;     // chains touching a vertex
  std::vector<int> perm;                       // position -> vertex
  std::vector<int> pos;                        // vertex -> position, -1 unplaced
  std::uint32_t placed = 0;

  bool chain_ordered(const std::vector<int>& seq) const {
    for (int i = 0; i + 1 < static_cast<int>(seq.size()); ++i) {
      int max_i = -1, min_j = h.num_vertices;
      for (int v : h.edges[seq[i]]) max_i = std::max(max_i, pos[v]);
      for (int v : h.edges[seq[i + 1]]) min_j = std::min(min_j, pos[v]);
      if (max_i > min_j) return false;
    }
    return true;
  }

  bool search(int depth) {
    if (depth == h.num_vertices) return true;
    for (int v = 0; v < h.num_vertices; ++v) {
      if (placed & (1u << v)) continue;
      pos[v] = depth;
      placed |= 1u << v;
      perm[depth] = v;
      bool doomed = false;
      // a chain that just became fully placed keeps its relative positions,
      // so an ordered one dooms every extension of this prefix
      for (int ci : by_vertex[v]) {
        if ((chain_masks[ci] & ~placed) == 0 && chain_ordered(chains[ci])) {
          doomed = true;
          break;
        }
      }
      if (!doomed && search(depth + 1)) return true;
      placed &= ~(1u << v);
      pos[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<LinearOrder> find_good_order(const Hypergraph& h, int r,
                                           int vertex_cap) {
  if (h.num_vertices > vertex_cap)
    throw std::runtime_error("find_good_order: vertex cap exceeded");
  if (h.edges.empty()) return identity_order(h.num_vertices);
  OrderSearch s{h, enumerate_chains(h, r), {}, {}, {}, {}, 0};
  if (s.chains.empty()) return identity_order(h.num_vertices);
  s.by_vertex.resize(h.num_vertices);
  for (int ci = 0; ci < static_cast<int>(s.chains.size()); ++ci) {
    std::uint32_t mask = 0;
    for (int ei : s.chains[ci])
      for (int v : h.edges[ei]) mask |= 1u << v;
    s.chain_masks.push_back(mask);
    for (int v = 0; v < h.num_vertices; ++v)
      if (mask & (1u << v)) s.by_vertex[v].push_back(ci);
  }
  s.perm.assign(h.num_vertices, -1);
  s.pos.assign(h.num_vertices, -1);
  if (s.search(0)) return s.perm;
  return std::nullopt;
}

}  // namespace propb
