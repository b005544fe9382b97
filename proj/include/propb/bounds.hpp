#pragma once

#include "propb/bigint.hpp"

namespace propb {

// Finite-r thresholds appear in the source with the one-direction ordered
// probability (numerator 4 at n = 3); `corrected` doubles it so the
// probability covers both orientations of a set-counted chain.
enum class Orientation { as_printed, corrected };

// (n-1) ceil(r/n) floor((n-1)r/n)^(n-1), exact.
BigInt alon_lower(int n, int r);

// Largest |E| with 2 |E|^r / r! * [(n-1)!]^2 [(n-2)!]^(r-2) / ((n-1)r+1)! < 1
// (orientation factor doubles the probability term). Exact big-integer
// arithmetic, maximality re-verified by substituting |E| and |E|+1.
BigInt pluhar_threshold(int n, int r,
                        Orientation o = Orientation::as_printed);

// Largest |E| with |E|^r / (2 (r-1)^(r-1)) * 4/(2r+1)! < 1 (n = 3); the 4
// becomes 8 under `corrected`, the sound default.
BigInt thm1_threshold(int r, Orientation o = Orientation::corrected);

enum class LimitKind { alon, pluhar, thm1 };

// r-th term of the normalized threshold sequence m-bound(r)/r^3, evaluated
// via long-double log-gamma. thm1 -> 4/e^2, pluhar -> 4/e^3, alon -> 8/27.
long double limit_sequence(LimitKind kind, long long r);

// Erdős conjecture value C((n-1)r+1, n).
BigInt erdos_value(int n, int r);
// Upper limit of erdos_value(n,r)/r^n; 4/3 at n = 3.
Rational upper_limit(int n);

enum class AsVariant { combined, pure };
enum class AsExponent { as_printed = 1, corrected = 2 };

struct AsOptimum {
  double c = 0.0;
  double p = 0.0;
  double x = 1.0;
  bool certified = false;  // both constraints strictly < 1 at (c, p, x)
};

// Strict feasibility of (c, p, x): c x^3 p K < 1 with K = e (combined) or
// e^2 (pure), and 3 c (1-p)^k x^3 / (2(x-1)) < 1 with k the exponent.
bool as_feasible(double c, double p, double x, AsVariant variant,
                 AsExponent exponent);

// Grid search maximizing c over p in (0,1), x in (1,2]; ties broken toward
// smaller p then smaller x. OpenMP-parallel over p slices with deterministic
// reduction; serial reference below.
AsOptimum as_optimize(AsVariant variant, AsExponent exponent,
                      int grid = 1000);

namespace serial {
AsOptimum as_optimize(AsVariant variant, AsExponent exponent,
                      int grid = 1000);
}

struct EventBounds {
  double bad_prob = 0.0;     // t^(n-1) (t + n(1-t)), t = (1-p)/a
  double chain_event = 0.0;  // a^(-a(n-2)) p^(a-1) / (a-1)!
};

EventBounds as_event_bounds(int n, int a, double p);

}  // namespace propb
