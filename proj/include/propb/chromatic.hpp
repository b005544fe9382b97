#pragma once

#include "propb/hypergraph.hpp"

namespace propb {

// Exact r-colorability by backtracking with first-use symmetry breaking.
bool is_r_colorable(const Hypergraph& h, int r);

// Exact chromatic number; chi of an edgeless (or empty) hypergraph is 1.
// Throws std::runtime_error when num_vertices exceeds vertex_cap.
int chromatic_number(const Hypergraph& h, int vertex_cap = 16);

}  // namespace propb
