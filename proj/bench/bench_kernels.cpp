// Compares the OpenMP kernels against their serial references on workloads
// big enough to show a difference when threads are available.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "propb/bounds.hpp"
#include "propb/chains.hpp"
#include "propb/colorers.hpp"
#include "propb/hypergraph.hpp"
#include "propb/inducibility.hpp"

using namespace propb;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  Hypergraph k9 = complete_hypergraph(9, 3);
  std::int64_t chains_s = 0, chains_p = 0;
  double ts = time_ms([&] {
    chains_s = serial::count_chains(k9, 3, ChainMode::sequences);
  });
  double tp = time_ms([&] {
    chains_p = count_chains(k9, 3, ChainMode::sequences);
  });
  row("count_chains k9 r=3", ts, tp);
  if (chains_s != chains_p) {
    std::printf("MISMATCH: %lld vs %lld\n", (long long)chains_s,
                (long long)chains_p);
    return 1;
  }

  Graph b = blowup(3, 3);  // 64 vertices
  std::int64_t paths_s = 0, paths_p = 0;
  ts = time_ms([&] { paths_s = serial::count_induced_paths(b, 4); });
  tp = time_ms([&] { paths_p = count_induced_paths(b, 4); });
  row("induced P4, blowup(3,3)", ts, tp);
  if (paths_s != paths_p) return 1;

  Hypergraph k7 = complete_hypergraph(7, 3);
  TrialReport rs, rp;
  ts = time_ms([&] {
    rs = serial::run_trials(Algorithm::akolzin_shabanov, k7,
                            TrialParams{4, 3, 0.741}, 20000, 7);
  });
  tp = time_ms([&] {
    rp = run_trials(Algorithm::akolzin_shabanov, k7, TrialParams{4, 3, 0.741},
                    20000, 7);
  });
  row("run_trials as 2e4", ts, tp);
  if (rs.successes != rp.successes) return 1;

  AsOptimum os, op;
  ts = time_ms([&] {
    os = serial::as_optimize(AsVariant::combined, AsExponent::corrected, 2000);
  });
  tp = time_ms([&] {
    op = as_optimize(AsVariant::combined, AsExponent::corrected, 2000);
  });
  row("as_optimize grid 2000", ts, tp);
  if (os.c != op.c || os.p != op.p || os.x != op.x) return 1;

  std::printf("all kernels agree with their references\n");
  return 0;
}
