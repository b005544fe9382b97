#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace propb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt ipow(BigInt base, unsigned e);

// Largest x >= 0 with x^r <= m; requires m >= 0, r >= 1.
BigInt iroot_floor(const BigInt& m, unsigned r);

}  // namespace propb
