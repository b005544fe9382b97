#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace propb {

using Edge = std::vector<int>;

/// An n-uniform hypergraph with 0-based vertex ids and a canonical,
/// duplicate-free edge list (each edge sorted, edges sorted lexicographically).
struct Hypergraph {
  int num_vertices = 0;
  int uniformity = 2;
  std::vector<Edge> edges;

  int num_edges() const { return static_cast<int>(edges.size()); }
};

// Canonicalizes and validates; throws std::invalid_argument on any
// invariant violation (wrong edge size, repeated vertex, out-of-range id,
// duplicate edge).
Hypergraph make_hypergraph(int num_vertices, int uniformity,
                           std::vector<Edge> edges);

/// Vertex coloring with palette 1..palette.
struct Coloring {
  int palette = 1;
  std::vector<int> colors;  // colors[v] in 1..palette
};

// position -> vertex permutation
using LinearOrder = std::vector<int>;

LinearOrder identity_order(int num_vertices);
// Inverse permutation: vertex -> position.
std::vector<int> order_positions(const LinearOrder& ord);

// True iff no edge is monochromatic. Throws on dimension mismatch.
bool is_proper(const Hypergraph& h, const Coloring& c);

// Number of monochromatic edges under c (no properness requirement).
int count_monochromatic(const Hypergraph& h, const Coloring& c);

// Generators. All are pure: identical parameters (incl. seed) give
// identical hypergraphs.
Hypergraph complete_hypergraph(int v, int n);
Hypergraph fano_plane();
// r consecutive edges sharing exactly one vertex, on (n-1)r+1 vertices.
Hypergraph single_chain(int n, int r);
// m distinct edges sampled uniformly (rejection) from the C(v,n) candidates.
Hypergraph random_hypergraph(int v, int m, int n, std::uint64_t seed);

// Text format: line 1 = "<num_vertices> <num_edges> <n>", then one edge per
// line as n space-separated 0-based ids. '#' starts a comment line.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph load_hypergraph(const std::string& path);

}  // namespace propb
