#include "propb/frecursion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace propb {

namespace {

// Lazily built max-plus convolution layers: layer[j][s] is the best value of
// u[a_1] + ... + u[a_j] over compositions a_1 + ... + a_j = s. With u
// non-decreasing each layer is non-decreasing, so the budgeted maximum over
// sums <= A sits at A.
struct MaxPlusLayers {
  const std::vector<int>& u;
  std::vector<std::vector<int>> layer;  // layer[j], j >= 2

  explicit MaxPlusLayers(const std::vector<int>& base) : u(base) {}

  const std::vector<int>& ensure(int j, std::int64_t s) {
    if (j < 2) throw std::invalid_argument("max-plus layer needs p >= 2");
    while (static_cast<int>(layer.size()) < j - 1) layer.emplace_back();
    auto& lj = layer[j - 2];
    const std::vector<int>* prev = nullptr;
    if (j > 2) prev = &ensure(j - 1, s);
    for (std::int64_t t = lj.size(); t <= s; ++t) {
      int best = std::numeric_limits<int>::min();
      for (std::int64_t i = 0; i <= t; ++i) {
        int left = j == 2 ? u[i] : (*prev)[i];
        best = std::max(best, left + u[t - i]);
      }
      lj.push_back(best);
    }
    return lj;
  }

  // Argmax split of the top-level convolution at budget s.
  std::vector<std::int64_t> recover(int j, std::int64_t s) {
    std::vector<std::int64_t> parts;
    while (j > 2) {
      const auto& prev = ensure(j - 1, s);
      std::int64_t best_i = 0;
      int best = std::numeric_limits<int>::min();
      for (std::int64_t i = 0; i <= s; ++i)
        if (prev[s - i] + u[i] > best) {
          best = prev[s - i] + u[i];
          best_i = i;
        }
      parts.push_back(best_i);
      s -= best_i;
      --j;
    }
    std::int64_t best_i = 0;
    int best = std::numeric_limits<int>::min();
    for (std::int64_t i = 0; i <= s; ++i)
      if (u[i] + u[s - i] > best) {
        best = u[i] + u[s - i];
        best_i = i;
      }
    parts.push_back(best_i);
    parts.push_back(s - best_i);
    return parts;
  }
};

std::string split_string(const std::vector<std::int64_t>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts[i]);
  }
  return s;
}

}  // namespace

FTable seed_table() {
  FTable t;
  t.u.resize(27);
  t.exact.assign(27, true);
  t.provenance.assign(27, "seed");
  t.u[0] = 1;
  for (int n = 1; n <= 6; ++n) t.u[n] = 2;
  for (int n = 7; n <= 26; ++n) t.u[n] = 3;
  return t;
}

int cru_step(const FTable& t, std::int64_t n, int p) {
  if (p < 2) throw std::invalid_argument("cru_step: p >= 2");
  if (n < 1) throw std::invalid_argument("cru_step: N >= 1");
  std::int64_t budget = n / (static_cast<std::int64_t>(p) * p);
  if (budget > t.n_max())
    throw std::invalid_argument("cru_step: table does not cover the budget");
  MaxPlusLayers layers(t.u);
  return layers.ensure(p, budget)[budget];
}

FTable extend_table(FTable t, std::int64_t n_max, std::vector<int> p_set) {
  if (t.u.size() < 27) throw std::invalid_argument("extend_table: need the seed");
  std::sort(p_set.begin(), p_set.end());
  p_set.erase(std::unique(p_set.begin(), p_set.end()), p_set.end());
  if (p_set.empty() || p_set.front() < 2)
    throw std::invalid_argument("extend_table: p_set must contain integers >= 2");

  if (static_cast<std::int64_t>(t.u.size()) <= n_max) {
    t.u.resize(n_max + 1, std::numeric_limits<int>::max());
    t.exact.resize(n_max + 1, false);
    t.provenance.resize(n_max + 1, "");
  }

  bool changed = true;
  while (changed) {
    changed = false;
    MaxPlusLayers layers(t.u);
    for (std::int64_t n = 27; n <= n_max; ++n) {
      int best = t.u[n];
      int best_p = 0;
      for (int p : p_set) {
        std::int64_t budget = n / (static_cast<std::int64_t>(p) * p);
        int val = layers.ensure(p, budget)[budget];
        if (val < best) {
          best = val;
          best_p = p;
        }
      }
      if (best_p != 0) {
        std::int64_t budget =
            n / (static_cast<std::int64_t>(best_p) * best_p);
        t.u[n] = best;
        t.provenance[n] = "cru(p=" + std::to_string(best_p) + ", " +
                          split_string(layers.recover(best_p, budget)) + ")";
        changed = true;
      }
    }
    // monotone repair: f is non-decreasing, so a later upper bound also
    // bounds every earlier N
    int suffix_min = std::numeric_limits<int>::max();
    for (std::int64_t n = n_max; n >= 0; --n) {
      suffix_min = std::min(suffix_min, t.u[n]);
      if (t.u[n] > suffix_min) {
        t.u[n] = suffix_min;
        t.provenance[n] = "monotone-repair";
        changed = true;
      }
    }
  }
  return t;
}

SegmentResult segment_bound(const FTable& t, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("segment_bound: M >= 1");
  // window: integer a with M <= a and 27a < 64M (c3 = 64/27 exactly)
  std::int64_t a_hi = (64 * m - 1) / 27;
  if (a_hi > t.n_max())
    throw std::invalid_argument("segment_bound: window exceeds table");
  SegmentResult res;
  res.a_lo = m;
  res.a_hi = a_hi;
  double k = 0.0;
  for (std::int64_t a = m; a <= a_hi; ++a)
    k = std::max(k, t.u[a] * std::pow(static_cast<double>(a), -1.0 / 3.0));
  res.k = k;
  res.l3 = 1.0 / (k * k * k);
  return res;
}

FBoundReport best_bound(const FTable& t, std::int64_t m_lo, std::int64_t m_hi) {
  if (m_lo < 1 || m_hi < m_lo)
    throw std::invalid_argument("best_bound: bad M range");
  FBoundReport rep;
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    if ((64 * m - 1) / 27 > t.n_max()) continue;  // window not covered
    rep.feasible_m.push_back(m);
    SegmentResult res = segment_bound(t, m);
    if (res.l3 > rep.best.l3) {
      rep.best = res;
      rep.best_m = m;
    }
  }
  if (rep.feasible_m.empty())
    throw std::invalid_argument("best_bound: no feasible M in range");
  return rep;
}

}  // namespace propb
