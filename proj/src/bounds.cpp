#include "propb/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace propb {

BigInt alon_lower(int n, int r) {
  if (n < 2 || r < 1) throw std::invalid_argument("alon_lower: n >= 2, r >= 1");
  BigInt ceil_rn = (r + n - 1) / n;
  BigInt floor_part = static_cast<long long>(n - 1) * r / n;
  return (n - 1) * ceil_rn * ipow(floor_part, n - 1);
}

namespace {

// Largest E with orient * prob_num * E^r < den, verified by re-substitution.
BigInt largest_below(const BigInt& num, const BigInt& den, int r) {
  if (num <= 0 || den <= 0) throw std::logic_error("threshold: bad fraction");
  BigInt bound = iroot_floor(den / num, r);
  while (num * ipow(bound + 1, r) < den) ++bound;
  while (bound > 0 && num * ipow(bound, r) >= den) --bound;
  // maximality certificate
  if (!(num * ipow(bound, r) < den && num * ipow(bound + 1, r) >= den))
    throw std::logic_error("threshold: maximality check failed");
  return bound;
}

}  // namespace

BigInt pluhar_threshold(int n, int r, Orientation o) {
  if (n < 2 || r < 2)
    throw std::invalid_argument("pluhar_threshold: n >= 2, r >= 2");
  BigInt prob_num = factorial(n - 1) * factorial(n - 1) *
                    ipow(factorial(n - 2), r - 2);
  if (o == Orientation::corrected) prob_num *= 2;
  BigInt num = 2 * prob_num;                        // 2 |E|^r / r! chains
  BigInt den = factorial(r) * factorial((n - 1) * r + 1);
  return largest_below(num, den, r);
}

BigInt thm1_threshold(int r, Orientation o) {
  if (r < 2) throw std::invalid_argument("thm1_threshold: r >= 2");
  BigInt nu = o == Orientation::corrected ? 8 : 4;
  BigInt den = 2 * ipow(BigInt(r - 1), r - 1) * factorial(2 * r + 1);
  return largest_below(nu, den, r);
}

long double limit_sequence(LimitKind kind, long long r) {
  if (r < 2) throw std::invalid_argument("limit_sequence: r >= 2");
  long double rr = static_cast<long double>(r);
  long double r3 = rr * rr * rr;
  switch (kind) {
    case LimitKind::alon: {
      long long ceil_r3 = (r + 2) / 3;
      long long floor_2r3 = 2 * r / 3;
      return 2.0L * ceil_r3 * floor_2r3 * floor_2r3 / r3;
    }
    case LimitKind::pluhar: {
      // (r! (2r+1)! / 8)^(1/r) / r^3
      long double lg = std::lgamma(rr + 1) + std::lgamma(2 * rr + 2) -
                       std::log(8.0L);
      return std::exp(lg / rr) / r3;
    }
    case LimitKind::thm1: {
      // ((2r+1)! (r-1)^(r-1) / 2)^(1/r) / r^3
      long double lg = std::lgamma(2 * rr + 2) +
                       (rr - 1) * std::log(rr - 1) - std::log(2.0L);
      return std::exp(lg / rr) / r3;
    }
  }
  throw std::logic_error("unknown limit kind");
}

BigInt erdos_value(int n, int r) {
  if (n < 2 || r < 1) throw std::invalid_argument("erdos_value: n >= 2, r >= 1");
  return binomial((n - 1) * r + 1, n);
}

Rational upper_limit(int n) {
  if (n < 2) throw std::invalid_argument("upper_limit: n >= 2");
  // leading coefficient of C((n-1)r+1, n) in r: (n-1)^n / n!
  return Rational(ipow(BigInt(n - 1), n), factorial(n));
}

namespace {

constexpr double kE = 2.718281828459045235360287;

double first_constraint(double c, double p, double x, AsVariant variant) {
  double k = variant == AsVariant::combined ? kE : kE * kE;
  return c * x * x * x * p * k;
}

double second_constraint(double c, double p, double x, AsExponent exponent) {
  double q = exponent == AsExponent::corrected ? (1 - p) * (1 - p) : (1 - p);
  return 3.0 * c * q * x * x * x / (2.0 * (x - 1.0));
}

double best_c_at(double p, double x, AsVariant variant, AsExponent exponent) {
  double k = variant == AsVariant::combined ? kE : kE * kE;
  double q = exponent == AsExponent::corrected ? (1 - p) * (1 - p) : (1 - p);
  double x3 = x * x * x;
  double c1 = 1.0 / (k * p * x3);
  double c2 = 2.0 * (x - 1.0) / (3.0 * q * x3);
  return std::min(c1, c2);
}

AsOptimum certify(double c_sup, double p, double x, AsVariant variant,
                  AsExponent exponent) {
  AsOptimum opt;
  opt.c = c_sup * (1.0 - 1e-9);  // the supremum itself sits on the boundary
  opt.p = p;
  opt.x = x;
  opt.certified = as_feasible(opt.c, p, x, variant, exponent);
  return opt;
}

}  // namespace

bool as_feasible(double c, double p, double x, AsVariant variant,
                 AsExponent exponent) {
  if (!(p > 0.0 && p < 1.0 && x > 1.0)) return false;
  return first_constraint(c, p, x, variant) < 1.0 &&
         second_constraint(c, p, x, exponent) < 1.0;
}

namespace serial {
AsOptimum as_optimize(AsVariant variant, AsExponent exponent, int grid) {
  if (grid < 10) throw std::invalid_argument("as_optimize: grid too coarse");
  double best = -1.0;
  int best_i = 0, best_j = 0;
  for (int i = 1; i < grid; ++i) {
    double p = static_cast<double>(i) / grid;
    for (int j = 1; j <= grid; ++j) {
      double x = 1.0 + static_cast<double>(j) / grid;
      double c = best_c_at(p, x, variant, exponent);
      if (c > best) {
        best = c;
        best_i = i;
        best_j = j;
      }
    }
  }
  return certify(best, static_cast<double>(best_i) / grid,
                 1.0 + static_cast<double>(best_j) / grid, variant, exponent);
}
}  // namespace serial

AsOptimum as_optimize(AsVariant variant, AsExponent exponent, int grid) {
  if (grid < 10) throw std::invalid_argument("as_optimize: grid too coarse");
  struct Best {
    double c = -1.0;
    int i = 0, j = 0;
  };
  std::vector<Best> per_slice(grid);
#pragma omp parallel for schedule(static)
  for (int i = 1; i < grid; ++i) {
    double p = static_cast<double>(i) / grid;
    Best b;
    b.i = i;
    for (int j = 1; j <= grid; ++j) {
      double x = 1.0 + static_cast<double>(j) / grid;
      double c = best_c_at(p, x, variant, exponent);
      if (c > b.c) {
        b.c = c;
        b.j = j;
      }
    }
    per_slice[i] = b;
  }
  // deterministic reduction: ascending p, then ascending x, strict improvement
  Best best;
  for (int i = 1; i < grid; ++i)
    if (per_slice[i].c > best.c) best = per_slice[i];
  return certify(best.c, static_cast<double>(best.i) / grid,
                 1.0 + static_cast<double>(best.j) / grid, variant, exponent);
}

EventBounds as_event_bounds(int n, int a, double p) {
  if (a < 2 || p < 0.0 || p > 1.0)
    throw std::invalid_argument("as_event_bounds: a >= 2, p in [0,1]");
  double t = (1.0 - p) / a;
  EventBounds eb;
  eb.bad_prob = std::pow(t, n - 1) * (t + n * (1.0 - t));
  // log-space for large a
  double lg = -static_cast<double>(a) * (n - 2) * std::log(a) +
              (p > 0.0 ? (a - 1) * std::log(p) : (a > 1 ? -INFINITY : 0.0)) -
              std::lgamma(static_cast<double>(a));
  eb.chain_event = std::exp(lg);
  return eb;
}

}  // namespace propb
