#include <sstream>

#include "doctest.h"
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

// Exhaustive oracle: does any proper r-coloring exist?
bool brute_force_colorable(const Hypergraph& h, int r) {
  std::vector<int> colors(h.num_vertices, 1);
  while (true) {
    if (is_proper(h, Coloring{r, colors})) return true;
    int i = 0;
    while (i < h.num_vertices && colors[i] == r) colors[i++] = 1;
    if (i == h.num_vertices) return false;
    ++colors[i];
  }
}

}  // namespace

TEST_CASE("hypergraph validation") {
  CHECK_THROWS(make_hypergraph(3, 3, {{0, 1, 1}}));
  CHECK_THROWS(make_hypergraph(3, 3, {{0, 1, 3}}));
  CHECK_THROWS(make_hypergraph(4, 3, {{0, 1, 2}, {2, 1, 0}}));  // duplicate
  CHECK_THROWS(make_hypergraph(4, 3, {{0, 1}}));
  Hypergraph h = make_hypergraph(4, 3, {{3, 1, 0}});
  CHECK(h.edges[0] == Edge{0, 1, 3});
}

TEST_CASE("is_proper") {
  Hypergraph h = make_hypergraph(3, 3, {{0, 1, 2}});
  CHECK_FALSE(is_proper(h, Coloring{2, {1, 1, 1}}));
  CHECK(is_proper(h, Coloring{2, {1, 1, 2}}));
  CHECK_THROWS(is_proper(h, Coloring{2, {1, 1}}));
}

TEST_CASE("fano plane has no proper 2-coloring") {
  Hypergraph fano = fano_plane();
  // oracle: all 2^7 colorings
  for (int mask = 0; mask < 128; ++mask) {
    std::vector<int> colors(7);
    for (int v = 0; v < 7; ++v) colors[v] = (mask >> v & 1) + 1;
    CHECK_FALSE(is_proper(fano, Coloring{2, colors}));
  }
  CHECK_FALSE(brute_force_colorable(fano, 2));
}

TEST_CASE("fano plane structure") {
  Hypergraph fano = fano_plane();
  CHECK(fano.num_vertices == 7);
  CHECK(fano.num_edges() == 7);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      CHECK(hyperedge_intersection(fano.edges[i], fano.edges[j]) == 1);
}

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(fano_plane()) == 3);
  CHECK(chromatic_number(complete_hypergraph(5, 3)) == 3);
  CHECK(chromatic_number(complete_hypergraph(7, 3)) == 4);
  CHECK(chromatic_number(make_hypergraph(0, 2, {})) == 1);
  CHECK(chromatic_number(make_hypergraph(5, 3, {})) == 1);
  CHECK_THROWS(chromatic_number(complete_hypergraph(17, 3)));
}

TEST_CASE("chromatic of complete 3-uniform is ceil(v/2)") {
  for (int v = 3; v <= 9; ++v)
    CHECK(chromatic_number(complete_hypergraph(v, 3)) == (v + 1) / 2);
}

TEST_CASE("m(2,r) sanity: complete graphs") {
  for (int r = 1; r <= 5; ++r) {
    Hypergraph k = complete_hypergraph(r + 1, 2);
    CHECK(k.num_edges() == r * (r + 1) / 2);
    CHECK(chromatic_number(k) == r + 1);
  }
}

TEST_CASE("chromatic number agrees with the exhaustive oracle") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Hypergraph h = random_hypergraph(6, 4, 3, seed);
    int chi = chromatic_number(h);
    CHECK(brute_force_colorable(h, chi));
    CHECK_FALSE(brute_force_colorable(h, chi - 1));
  }
}

TEST_CASE("generators") {
  CHECK(complete_hypergraph(5, 3).num_edges() == 10);
  Hypergraph c = single_chain(3, 2);
  CHECK(c.edges == std::vector<Edge>{{0, 1, 2}, {2, 3, 4}});
  // generation is pure
  Hypergraph a = random_hypergraph(7, 6, 3, 99);
  Hypergraph b = random_hypergraph(7, 6, 3, 99);
  CHECK(a.edges == b.edges);
  Hypergraph d = random_hypergraph(7, 6, 3, 100);
  CHECK(a.edges != d.edges);
}

TEST_CASE("file format round-trip") {
  Hypergraph h = random_hypergraph(8, 7, 3, 5);
  std::ostringstream out;
  write_hypergraph(out, h);
  std::istringstream in(out.str());
  Hypergraph back = read_hypergraph(in);
  CHECK(back.num_vertices == h.num_vertices);
  CHECK(back.edges == h.edges);
  std::ostringstream out2;
  write_hypergraph(out2, back);
  CHECK(out.str() == out2.str());  // bit-exact

  std::istringstream commented("# fano-ish\n3 1 3\n0 1 2\n");
  CHECK(read_hypergraph(commented).num_edges() == 1);
  std::istringstream dup("3 2 3\n0 1 2\n0 1 2\n");
  CHECK_THROWS(read_hypergraph(dup));
}
