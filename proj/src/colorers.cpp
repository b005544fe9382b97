#include "propb/colorers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "propb/chains.hpp"

namespace propb {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial + 1));
}

namespace {

// Recolors the minimum vertex of each listed monochromatic edge with colors
// a+1..r, charging one slot per edge and at most n-1 slots per color.
// Requires mono.size() <= (n-1)(r-a).
void repair_edges(const Hypergraph& h, std::vector<int>& colors, int a, int r,
                  const std::vector<int>& mono) {
  int n = h.uniformity;
  int cur = a + 1, slots = 0;
  for (int ei : mono) {
    int v = h.edges[ei].front();  // edges are sorted, so front is the minimum
    if (colors[v] <= a) colors[v] = cur;
    if (++slots == n - 1) {
      ++cur;
      slots = 0;
    }
  }
}

std::vector<int> monochromatic_indices(const Hypergraph& h,
                                       const std::vector<int>& colors) {
  std::vector<int> mono;
  for (int i = 0; i < h.num_edges(); ++i) {
    const Edge& e = h.edges[i];
    int c = colors[e.front()];
    bool all = true;
    for (int v : e)
      if (colors[v] != c) {
        all = false;
        break;
      }
    if (all) mono.push_back(i);
  }
  return mono;
}

ColorOutcome fail(std::string reason) {
  ColorOutcome out;
  out.failure_reason = std::move(reason);
  return out;
}

ColorOutcome finish(const Hypergraph& h, std::vector<int> colors, int r) {
  Coloring c{r, std::move(colors)};
  if (!is_proper(h, c)) throw std::logic_error("repair produced improper coloring");
  ColorOutcome out;
  out.coloring = std::move(c);
  return out;
}

}  // namespace

ColorOutcome alon_color(const Hypergraph& h, int r, int a, std::uint64_t seed) {
  if (a < 1 || a >= r) throw std::invalid_argument("alon_color: need 1 <= a < r");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> color(1, a);
  std::vector<int> colors(h.num_vertices);
  for (int v = 0; v < h.num_vertices; ++v) colors[v] = color(rng);
  auto mono = monochromatic_indices(h, colors);
  int n = h.uniformity;
  if (static_cast<int>(mono.size()) > (n - 1) * (r - a))
    return fail("too_many_monochromatic_edges");
  repair_edges(h, colors, a, r, mono);
  return finish(h, std::move(colors), r);
}

ColorOutcome pluhar_color(const Hypergraph& h, int r, std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("pluhar_color: r >= 1");
  std::mt19937_64 rng(seed);
  LinearOrder ord = identity_order(h.num_vertices);
  std::shuffle(ord.begin(), ord.end(), rng);
  GreedyResult res = greedy_color(h, ord, r);
  if (!res) return fail("greedy_stuck");
  ColorOutcome out;
  out.coloring = std::move(res.coloring);
  return out;
}

ColorOutcome as_color(const Hypergraph& h, int r, int a, double p,
                      std::uint64_t seed) {
  if (a < 1 || a >= r) throw std::invalid_argument("as_color: need 1 <= a < r");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("as_color: p in [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> w(h.num_vertices);
  for (double& x : w) x = unif(rng);

  int n = h.uniformity;
  double threshold = (1.0 - p) / a;
  std::vector<Edge> good;
  std::vector<int> bad;  // indices into h.edges
  for (int i = 0; i < h.num_edges(); ++i) {
    const Edge& e = h.edges[i];
    double lo = w[e.front()], hi = lo;
    for (int v : e) {
      lo = std::min(lo, w[v]);
      hi = std::max(hi, w[v]);
    }
    if (hi - lo <= threshold)
      bad.push_back(i);
    else
      good.push_back(e);
  }

  // weight order, ties broken by vertex id (probability-zero event)
  LinearOrder ord = identity_order(h.num_vertices);
  std::sort(ord.begin(), ord.end(), [&](int u, int v) {
    return w[u] < w[v] || (w[u] == w[v] && u < v);
  });

  Hypergraph good_h = make_hypergraph(h.num_vertices, n, std::move(good));
  GreedyResult phase1 = greedy_color(good_h, ord, a);
  if (!phase1) return fail("phase1_greedy_stuck");
  if (static_cast<int>(bad.size()) > (n - 1) * (r - a))
    return fail("too_many_bad_edges");

  std::vector<int> colors = std::move(phase1.coloring->colors);
  std::vector<int> mono_bad;
  for (int ei : bad) {
    const Edge& e = h.edges[ei];
    int c = colors[e.front()];
    bool all = true;
    for (int v : e)
      if (colors[v] != c) {
        all = false;
        break;
      }
    if (all) mono_bad.push_back(ei);
  }
  repair_edges(h, colors, a, r, mono_bad);
  return finish(h, std::move(colors), r);
}

namespace {

ColorOutcome run_one(Algorithm alg, const Hypergraph& h,
                     const TrialParams& params, std::uint64_t subseed) {
  switch (alg) {
    case Algorithm::alon:
      return alon_color(h, params.r, params.a, subseed);
    case Algorithm::pluhar:
      return pluhar_color(h, params.r, subseed);
    case Algorithm::akolzin_shabanov:
      return as_color(h, params.r, params.a, params.p, subseed);
  }
  throw std::logic_error("unknown algorithm");
}

const char* algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::alon:
      return "alon";
    case Algorithm::pluhar:
      return "pluhar";
    case Algorithm::akolzin_shabanov:
      return "akolzin_shabanov";
  }
  return "?";
}

TrialReport aggregate(Algorithm alg, const Hypergraph& h,
                      const TrialParams& params, std::int64_t trials,
                      const std::vector<ColorOutcome>& outcomes) {
  TrialReport rep;
  rep.algorithm = algorithm_name(alg);
  rep.params = params;
  rep.trials = trials;
  for (const auto& out : outcomes) {
    if (out) {
      if (!is_proper(h, *out.coloring))
        throw std::logic_error("success with improper coloring");
      ++rep.successes;
    } else {
      ++rep.failure_tally[out.failure_reason];
    }
  }
  return rep;
}

}  // namespace

namespace serial {
TrialReport run_trials(Algorithm alg, const Hypergraph& h,
                       const TrialParams& params, std::int64_t trials,
                       std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_trials: trials >= 1");
  std::vector<ColorOutcome> outcomes(trials);
  for (std::int64_t t = 0; t < trials; ++t)
    outcomes[t] = run_one(alg, h, params, derive_subseed(seed, t));
  return aggregate(alg, h, params, trials, outcomes);
}
}  // namespace serial

TrialReport run_trials(Algorithm alg, const Hypergraph& h,
                       const TrialParams& params, std::int64_t trials,
                       std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_trials: trials >= 1");
  std::vector<ColorOutcome> outcomes(trials);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t t = 0; t < trials; ++t)
    outcomes[t] = run_one(alg, h, params, derive_subseed(seed, t));
  return aggregate(alg, h, params, trials, outcomes);
}

SampleStats empirical_bad_edge_rate(int n, int a, double p,
                                    std::int64_t samples, std::uint64_t seed) {
  if (n < 2 || a < 1 || samples < 1)
    throw std::invalid_argument("empirical_bad_edge_rate: bad parameters");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double threshold = (1.0 - p) / a;
  std::int64_t bad = 0;
  for (std::int64_t s = 0; s < samples; ++s) {
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < n; ++i) {
      double x = unif(rng);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    if (hi - lo <= threshold) ++bad;
  }
  double mean = static_cast<double>(bad) / samples;
  SampleStats st;
  st.mean = mean;
  st.stddev = std::sqrt(mean * (1.0 - mean));
  st.samples = samples;
  return st;
}

SampleStats empirical_monochromatic_count(const Hypergraph& h, int a,
                                          std::int64_t trials,
                                          std::uint64_t seed) {
  if (a < 1 || trials < 1)
    throw std::invalid_argument("empirical_monochromatic_count: bad parameters");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> color(1, a);
  double sum = 0.0, sumsq = 0.0;
  std::vector<int> colors(h.num_vertices);
  for (std::int64_t t = 0; t < trials; ++t) {
    for (int v = 0; v < h.num_vertices; ++v) colors[v] = color(rng);
    int k = count_monochromatic(h, Coloring{a, colors});
    sum += k;
    sumsq += static_cast<double>(k) * k;
  }
  SampleStats st;
  st.mean = sum / trials;
  st.stddev = std::sqrt(std::max(0.0, sumsq / trials - st.mean * st.mean));
  st.samples = trials;
  return st;
}

}  // namespace propb
