#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "propb/bigint.hpp"
#include "propb/hypergraph.hpp"

namespace propb {

enum class ChainMode { sequences, sets };

// True iff seq (edge indices) satisfies |a_i ∩ a_j| = 1 for |i-j| = 1 and
// a_i ∩ a_j = ∅ otherwise.
bool is_chain(const Hypergraph& h, const std::vector<int>& seq);

// All r-chains as directed sequences (a chain and its reversal are two
// entries). Throws when |E| exceeds edge_cap.
std::vector<std::vector<int>> enumerate_chains(const Hypergraph& h, int r,
                                               int edge_cap = 100);

// Exact chain count. `sequences` counts directed chains, `sets` counts each
// underlying edge set once (every chain set yields exactly two sequences).
// OpenMP-parallel over the first edge; serial::count_chains is the reference.
std::int64_t count_chains(const Hypergraph& h, int r, ChainMode mode,
                          int edge_cap = 100);

namespace serial {
std::int64_t count_chains(const Hypergraph& h, int r, ChainMode mode,
                          int edge_cap = 100);
}

// Precondition: is_chain(h, seq); throws otherwise. True iff under ord every
// vertex of an earlier edge precedes-or-equals every vertex of a later edge.
bool is_ordered_chain(const Hypergraph& h, const std::vector<int>& seq,
                      const LinearOrder& ord);

// True iff some r-chain of h is ordered under ord.
bool has_ordered_chain(const Hypergraph& h, const LinearOrder& ord, int r,
                       int edge_cap = 100);

// Exact probability [(n-1)!]^2 [(n-2)!]^(r-2) / ((n-1)r+1)! that a fixed
// r-chain is ordered under a uniform random order.
Rational ordered_chain_probability(int n, int r);

struct GreedyResult {
  std::optional<Coloring> coloring;
  int failed_vertex = -1;  // set when coloring is empty
  explicit operator bool() const { return coloring.has_value(); }
};

// First-fit in ord: vertex v gets the smallest color that leaves no edge
// whose ord-maximal vertex is v monochromatic. Failure at the first vertex
// needing color > r is a normal outcome.
GreedyResult greedy_color(const Hypergraph& h, const LinearOrder& ord, int r);

// Searches for a linear order admitting no ordered r-chain (backtracking over
// order prefixes with early ordered-chain detection). Returns a witness order
// when one exists. Throws when num_vertices exceeds vertex_cap.
std::optional<LinearOrder> find_good_order(const Hypergraph& h, int r,
                                           int vertex_cap = 9);

}  // namespace propb
