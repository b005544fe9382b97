#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "propb/chains.hpp"
#include "propb/chromatic.hpp"
#include "propb/hypergraph.hpp"

using namespace propb;

namespace {

int hyperedge_intersection(const Edge& a, const Edge& b) {
  int k = 0;
  for (int x : a)
    for (int y : b)
      if (x == y) ++k;
  return k;
}

// Oracle for r = 2: pairs of edges meeting in exactly one vertex.
std::int64_t count_intersecting_pairs(const Hypergraph& h) {
  std::int64_t k = 0;
  for (int i = 0; i < h.num_edges(); ++i)
    for (int j = i + 1; j < h.num_edges(); ++j)
      if (hyperedge_intersection(h.edges[i], h.edges[j]) == 1) ++k;
  return k;
}

}  // namespace

TEST_CASE("is_chain") {
  Hypergraph c2 = single_chain(3, 2);
  CHECK(is_chain(c2, {0, 1}));
  Hypergraph disjoint = make_hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}});
  CHECK_FALSE(is_chain(disjoint, {0, 1}));
  Hypergraph fano = fano_plane();
  // in fano all pairs intersect, so non-consecutive disjointness fails
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) {
        if (i == j || j == k || i == k) continue;
        CHECK_FALSE(is_chain(fano, {i, j, k}));
      }
  CHECK_THROWS(is_chain(c2, {0, 5}));
}

TEST_CASE("count_chains") {
  Hypergraph fano = fano_plane();
  CHECK(count_chains(fano, 2, ChainMode::sequences) == 42);
  CHECK(count_chains(fano, 2, ChainMode::sets) == 21);
  CHECK(count_intersecting_pairs(fano) == 21);

  Hypergraph c3 = single_chain(3, 3);
  CHECK(count_chains(c3, 3, ChainMode::sequences) == 2);
  CHECK(count_chains(c3, 3, ChainMode::sets) == 1);

  Hypergraph k5 = complete_hypergraph(5, 3);
  CHECK(count_chains(k5, 2, ChainMode::sets) == count_intersecting_pairs(k5));
}

TEST_CASE("sequences are twice sets") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Hypergraph h = random_hypergraph(7, 6, 3, seed);
    for (int r = 2; r <= 3; ++r)
      CHECK(count_chains(h, r, ChainMode::sequences) ==
            2 * count_chains(h, r, ChainMode::sets));
  }
}

TEST_CASE("is_ordered_chain") {
  Hypergraph c2 = single_chain(3, 2);
  LinearOrder id = identity_order(5);
  CHECK(is_ordered_chain(c2, {0, 1}, id));
  LinearOrder rev{4, 3, 2, 1, 0};
  CHECK_FALSE(is_ordered_chain(c2, {0, 1}, rev));
  CHECK(is_ordered_chain(c2, {1, 0}, rev));
  Hypergraph disjoint = make_hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}});
  CHECK_THROWS(is_ordered_chain(disjoint, {0, 1}, identity_order(6)));
}

TEST_CASE("exactly 4 of 120 orders make the forward 2-chain ordered") {
  Hypergraph c2 = single_chain(3, 2);
  LinearOrder ord = identity_order(5);
  int ordered = 0, total = 0;
  do {
    ++total;
    if (is_ordered_chain(c2, {0, 1}, ord)) ++ordered;
  } while (std::next_permutation(ord.begin(), ord.end()));
  CHECK(total == 120);
  CHECK(ordered == 4);
  CHECK(ordered_chain_probability(3, 2) == Rational(4, 120));
}

TEST_CASE("ordered_chain_probability") {
  CHECK(ordered_chain_probability(3, 2) == Rational(1, 30));
  CHECK(ordered_chain_probability(3, 3) == Rational(4, 5040));
  CHECK(ordered_chain_probability(2, 2) == Rational(1, 6));
  // n = 3 simplifies to 4/(2r+1)!
  BigInt f = 5040;
  for (int r = 3; r <= 8; ++r) {
    if (r > 3)
      for (int i = 2 * (r - 1) + 2; i <= 2 * r + 1; ++i) f *= i;
    CHECK(ordered_chain_probability(3, r) == Rational(4, f));
  }
}

TEST_CASE("exact expectation over all orders") {
  // average ordered-sequence count over all orders equals
  // count_chains(sequences) * ordered_chain_probability
  Hypergraph c2 = single_chain(3, 2);
  auto chains = enumerate_chains(c2, 2);
  CHECK(chains.size() == 2);
  LinearOrder ord = identity_order(5);
  std::int64_t total = 0;
  do {
    for (const auto& seq : chains)
      if (is_ordered_chain(c2, seq, ord)) ++total;
  } while (std::next_permutation(ord.begin(), ord.end()));
  Rational expectation(total, 120);
  CHECK(expectation == Rational(2) * ordered_chain_probability(3, 2));
}

TEST_CASE("greedy_color") {
  Hypergraph e = make_hypergraph(3, 3, {{0, 1, 2}});
  GreedyResult res = greedy_color(e, identity_order(3), 2);
  REQUIRE(res);
  CHECK(res.coloring->colors == std::vector<int>{1, 1, 2});

  Hypergraph fano = fano_plane();
  LinearOrder ord = identity_order(7);
  for (int i = 0; i < 30; ++i) {
    CHECK_FALSE(greedy_color(fano, ord, 2));  // chi(fano) = 3
    std::next_permutation(ord.begin(), ord.end());
  }

  Hypergraph c2 = single_chain(3, 2);
  CHECK(greedy_color(c2, identity_order(5), 2));
}

TEST_CASE("greedy soundness and failure produces an ordered chain") {
  Hypergraph fano = fano_plane();
  LinearOrder ord = identity_order(7);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    for (int r = 2; r <= 3; ++r) {
      GreedyResult res = greedy_color(fano, ord, r);
      if (res) {
        CHECK(is_proper(fano, *res.coloring));
      } else {
        ++failures;
        CHECK(has_ordered_chain(fano, ord, r));
      }
    }
    std::next_permutation(ord.begin(), ord.end());
  }
  CHECK(failures > 0);
}

TEST_CASE("find_good_order") {
  Hypergraph fano = fano_plane();
  CHECK_FALSE(find_good_order(fano, 2).has_value());
  auto w3 = find_good_order(fano, 3);
  REQUIRE(w3.has_value());
  CHECK_FALSE(has_ordered_chain(fano, *w3, 3));

  Hypergraph c2 = single_chain(3, 2);
  auto w = find_good_order(c2, 2);
  REQUIRE(w.has_value());
  CHECK_FALSE(has_ordered_chain(c2, *w, 2));

  Hypergraph edgeless = make_hypergraph(4, 3, {});
  CHECK(find_good_order(edgeless, 2).has_value());
  CHECK_THROWS(find_good_order(complete_hypergraph(10, 3), 2));
}

TEST_CASE("Pluhar equivalence on random instances") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Hypergraph h = random_hypergraph(5 + seed % 3, 1 + seed % 6, 3, seed);
    int chi = chromatic_number(h);
    for (int r = 2; r <= 3; ++r)
      CHECK(find_good_order(h, r).has_value() == (chi <= r));
  }
}
