#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "propb/chromatic.hpp"
#include "propb/frecursion.hpp"
#include "propb/hypergraph.hpp"

using namespace propb;

namespace {

// Brute-force oracle: max of sum u[a_i] over compositions with sum <= budget.
int brute_force_cru(const FTable& t, int parts, int budget) {
  if (parts == 1) {
    int best = t.u[0];
    for (int a = 0; a <= budget; ++a) best = std::max(best, t.u[a]);
    return best;
  }
  int best = 0;
  for (int a = 0; a <= budget; ++a)
    best = std::max(best, t.u[a] + brute_force_cru(t, parts - 1, budget - a));
  return best;
}

}  // namespace

TEST_CASE("seed table") {
  FTable t = seed_table();
  CHECK(t.u[0] == 1);
  CHECK(t.u[1] == 2);
  CHECK(t.u[6] == 2);
  CHECK(t.u[7] == 3);
  CHECK(t.u[26] == 3);
  CHECK(t.n_max() == 26);
  for (int n = 0; n <= 26; ++n) CHECK(t.exact[n]);
}

TEST_CASE("cru_step") {
  FTable t = seed_table();
  CHECK(cru_step(t, 104, 2) == 6);  // u[13] + u[13]
  CHECK(cru_step(t, 27, 2) == 4);   // u[1] + u[5]
  CHECK(cru_step(t, 8, 2) == 4);    // u[1] + u[1], exceeds the exact f(8) = 3
  CHECK_THROWS(cru_step(t, 200, 2));  // budget 50 beyond the seed table
}

TEST_CASE("cru matches the brute-force composition oracle") {
  FTable t = seed_table();
  for (int p = 2; p <= 3; ++p)
    for (int budget = 1; budget <= 26; ++budget) {
      std::int64_t n = static_cast<std::int64_t>(budget) * p * p;
      CHECK(cru_step(t, n, p) == brute_force_cru(t, p, budget));
      // monotone u: the max over sums <= budget sits at equality
      if (budget > 0)
        CHECK(brute_force_cru(t, p, budget) >=
              brute_force_cru(t, p, budget - 1));
    }
}

TEST_CASE("extend_table") {
  FTable t = extend_table(seed_table(), 120, {2});
  for (int n = 104; n <= 107; ++n) CHECK(t.u[n] <= 6);
  CHECK(t.u[27] == 4);
  // exact entries never move
  FTable s = seed_table();
  for (int n = 0; n <= 26; ++n) {
    CHECK(t.u[n] == s.u[n]);
    CHECK(t.exact[n]);
  }
  // u is non-decreasing after repair
  for (int n = 1; n <= 120; ++n) CHECK(t.u[n] >= t.u[n - 1]);
  // idempotent
  FTable twice = extend_table(t, 120, {2});
  CHECK(twice.u == t.u);
}

TEST_CASE("extend with p_set {2,3} never exceeds p = 2 alone") {
  FTable t2 = extend_table(seed_table(), 400, {2});
  FTable t23 = extend_table(seed_table(), 400, {2, 3});
  for (int n = 0; n <= 400; ++n) CHECK(t23.u[n] <= t2.u[n]);
}

TEST_CASE("segment_bound") {
  FTable t = seed_table();
  SegmentResult m7 = segment_bound(t, 7);
  CHECK(m7.a_lo == 7);
  CHECK(m7.a_hi == 16);
  CHECK(m7.k == doctest::Approx(3.0 / std::cbrt(7.0)));
  CHECK(m7.l3 == doctest::Approx(7.0 / 27.0));

  SegmentResult m11 = segment_bound(t, 11);
  CHECK(m11.k == doctest::Approx(3.0 / std::cbrt(11.0)));
  CHECK(m11.l3 == doctest::Approx(11.0 / 27.0));

  SegmentResult m1 = segment_bound(t, 1);
  CHECK(m1.k == doctest::Approx(2.0));
  CHECK(m1.l3 == doctest::Approx(0.125));

  CHECK_THROWS(segment_bound(t, 12));  // window reaches past N = 26
}

TEST_CASE("best_bound") {
  FTable t = seed_table();
  FBoundReport rep = best_bound(t, 1, 26);
  CHECK(rep.best_m == 11);
  CHECK(rep.best.l3 == doctest::Approx(11.0 / 27.0));
  CHECK(rep.source_target == doctest::Approx(0.324));
  CHECK(rep.best.l3 <= 4.0 / 3.0);

  // a larger table never lowers the best bound over the same M range
  FTable big = extend_table(seed_table(), 2000, {2, 3});
  FBoundReport rep2 = best_bound(big, 1, 26);
  CHECK(rep2.best.l3 >= rep.best.l3 - 1e-12);
}

TEST_CASE("segment bound never exceeds the upper limit") {
  FTable t = extend_table(seed_table(), 3000, {2, 3});
  for (std::int64_t m : {1, 5, 11, 40, 100, 500, 1000})
    CHECK(segment_bound(t, m).l3 <= 4.0 / 3.0 + 1e-12);
}

TEST_CASE("upper bounds dominate known constructions") {
  FTable t = seed_table();
  // f(1) >= 2: a single edge needs two colors
  CHECK(t.u[1] >= chromatic_number(make_hypergraph(3, 3, {{0, 1, 2}})));
  // f(7) >= 3: the fano plane
  CHECK(t.u[7] >= chromatic_number(fano_plane()));
  // intermediate N: any sub-hypergraph keeps chi small
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    for (int m = 2; m <= 6; ++m) {
      Hypergraph h = random_hypergraph(7, m, 3, seed);
      CHECK(t.u[m] >= chromatic_number(h));
    }
  }
}
