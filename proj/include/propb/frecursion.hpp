#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace propb {

/// Certified upper bounds on f(N), the maximum chromatic number of a
/// 3-uniform hypergraph with N edges.
struct FTable {
  std::vector<int> u;            // u[N] >= f(N)
  std::vector<bool> exact;       // entry known to equal f(N)
  std::vector<std::string> provenance;

  std::int64_t n_max() const { return static_cast<std::int64_t>(u.size()) - 1; }
};

// Exact values f(0)=1, f(1..6)=2, f(7..26)=3.
FTable seed_table();

// max over compositions a_1+...+a_p <= floor(N/p^2) of sum u[a_i], by
// iterated max-plus convolution. Requires finalized entries up to the budget.
int cru_step(const FTable& t, std::int64_t n, int p);

// Extends to n_max taking the min over p in p_set per N, then applies the
// monotone repair u[N] <- min_{N' >= N} u[N'] and iterates to a fixpoint.
FTable extend_table(FTable t, std::int64_t n_max, std::vector<int> p_set);

struct SegmentResult {
  double k = 0.0;   // max of u[a] a^(-1/3) over the window
  double l3 = 0.0;  // k^(-3)
  std::int64_t a_lo = 0;
  std::int64_t a_hi = 0;  // inclusive window [a_lo, a_hi]
};

// Window [M, c3*M) with c3 = 64/27 (integer a with 27a < 64M). Throws when
// the window exceeds the table.
SegmentResult segment_bound(const FTable& t, std::int64_t m);

struct FBoundReport {
  std::int64_t best_m = 0;
  SegmentResult best;
  double source_target = 0.324;
  std::vector<std::int64_t> feasible_m;  // M values whose window fits
};

// Maximizes the segment bound over M in [m_lo, m_hi] (skipping M whose
// window exceeds the table).
FBoundReport best_bound(const FTable& t, std::int64_t m_lo, std::int64_t m_hi);

}  // namespace propb
