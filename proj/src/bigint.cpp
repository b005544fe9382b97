#include "propb/bigint.hpp"

#include <stdexcept>

namespace propb {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

BigInt ipow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

BigInt iroot_floor(const BigInt& m, unsigned r) {
  if (m < 0) throw std::invalid_argument("iroot_floor: negative radicand");
  if (r == 0) throw std::invalid_argument("iroot_floor: zero root");
  if (m == 0) return 0;
  BigInt lo = 1, hi = 1;
  while (ipow(hi, r) <= m) hi <<= 1;
  // invariant: lo^r <= m < hi^r
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (ipow(mid, r) <= m)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace propb
