#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "propb/hypergraph.hpp"

namespace propb {

// Deterministic per-trial seed stream.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t trial);

struct ColorOutcome {
  std::optional<Coloring> coloring;
  std::string failure_reason;  // set when coloring is empty
  explicit operator bool() const { return coloring.has_value(); }
};

// Alon's recolor argument: uniform random a-coloring; if the monochromatic
// edges number at most (n-1)(r-a), recolor each one's minimum vertex with an
// unused color, at most n-1 repair slots per color.
ColorOutcome alon_color(const Hypergraph& h, int r, int a, std::uint64_t seed);

// Uniform random order + first-fit greedy with palette r.
ColorOutcome pluhar_color(const Hypergraph& h, int r, std::uint64_t seed);

// Akolzin–Shabanov: random vertex weights in [0,1]; an edge is bad when its
// weight spread is <= (1-p)/a; good edges are greedy-colored in weight order
// with colors 1..a, monochromatic bad edges repaired with the r-a unused
// colors provided there are at most (n-1)(r-a) bad edges.
ColorOutcome as_color(const Hypergraph& h, int r, int a, double p,
                      std::uint64_t seed);

enum class Algorithm { alon, pluhar, akolzin_shabanov };

struct TrialParams {
  int r = 2;
  int a = 1;       // alon / akolzin_shabanov
  double p = 0.5;  // akolzin_shabanov
};

struct TrialReport {
  std::string algorithm;
  TrialParams params;
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  std::map<std::string, std::int64_t> failure_tally;
};

// Runs `trials` independent seeded trials; every returned coloring is
// re-checked with is_proper before being counted a success. Trial t uses
// derive_subseed(seed, t), so the report is independent of execution order.
// OpenMP-parallel over trials; serial reference below.
TrialReport run_trials(Algorithm alg, const Hypergraph& h,
                       const TrialParams& params, std::int64_t trials,
                       std::uint64_t seed);

namespace serial {
TrialReport run_trials(Algorithm alg, const Hypergraph& h,
                       const TrialParams& params, std::int64_t trials,
                       std::uint64_t seed);
}

struct SampleStats {
  double mean = 0.0;
  double stddev = 0.0;  // of one sample, not of the mean
  std::int64_t samples = 0;
};

// Empirical frequency of a single n-vertex edge being bad at (a, p).
SampleStats empirical_bad_edge_rate(int n, int a, double p,
                                    std::int64_t samples, std::uint64_t seed);

// Empirical monochromatic-edge count of h under a uniform random a-coloring.
SampleStats empirical_monochromatic_count(const Hypergraph& h, int a,
                                          std::int64_t trials,
                                          std::uint64_t seed);

}  // namespace propb
