#pragma once

#include <cstdint>

#include "propb/bigint.hpp"
#include "propb/graph.hpp"
#include "propb/hypergraph.hpp"

namespace propb {

// Auxiliary graph on the edge set of h: i ~ j iff |e_i ∩ e_j| = 1.
Graph aux_graph(const Hypergraph& h);

// Exact number of induced paths on r vertices, each unordered path counted
// once. OpenMP-parallel over the start vertex; serial reference below.
std::int64_t count_induced_paths(const Graph& g, int r, int vertex_cap = 4096);

namespace serial {
std::int64_t count_induced_paths(const Graph& g, int r, int vertex_cap = 4096);
}

// Pippenger–Golumbic: I(G, P_r) <= (nv/2) (nv/(r-1))^(r-1).
double pg_bound(int nv, int r);

// Chain-count bound (m/2)(m/(r-1))^(r-1) on set-counted r-chains of a
// hypergraph with m edges.
double chain_bound(int m, int r);

// Recursive blow-up of C_{r+1}: level 1 is the cycle, level k replaces each
// cycle vertex by a level k-1 copy with complete joins between copies in
// adjacent cycle positions. (r+1)^k vertices.
Graph blowup(int r, int k, int vertex_cap = 4096);

// sum_{i=1..k} n^r / (r+1)^(i(r-1)) with n = (r+1)^k.
Rational example_formula(int r, int k);

}  // namespace propb
