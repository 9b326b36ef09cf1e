#ifndef CONESUM_STIRLING_HPP
#define CONESUM_STIRLING_HPP

#include <cstdint>

#include "conesum/rational.hpp"

namespace conesum {

// All Stirling families used by the angle-sum formulas. Values are exact and
// memoized behind a mutex; every function is safe to call concurrently.
//
// Conventions:
//   stirling1(n,k)  = [t^k] t(t+1)...(t+n-1),           stirling1(0,0) = 1
//   stirling1B(n,k) = [t^k] (t+1)(t+3)...(t+2n-1)
//   stirling2(n,k)  = #partitions of {1..n} into k non-empty blocks
//   stirling2B(n,k) = sum_{m=k..n} 2^(m-k) C(n,m) stirling2(m,k)
//
// The r-families store the shifted entries: rStirling1(n,k,r) means
// <n+r, k+r>_r and rStirling2(n,k,r) means {n+r, k+r}_r, extended to rational
// r by the polynomial continuation
//   <n+r, k+r>_r = sum_{m=0..n-k} C(n,m) stirling1(n-m,k) r^(rising m)
//   {n+r, k+r}_r = sum_{m=k..n}  C(n,m) stirling2(m,k)  r^(n-m).
// Out-of-range k returns 0 for every family.

Rational stirling1(unsigned n, unsigned k);
Rational stirling2(unsigned n, unsigned k);
Rational stirling1B(unsigned n, unsigned k);
Rational stirling2B(unsigned n, unsigned k);
Rational rStirling1(unsigned n, unsigned k, const Rational& r);
Rational rStirling2(unsigned n, unsigned k, const Rational& r);

// r(r+1)...(r+m-1) with the empty-product convention for m = 0.
inline Rational risingFactorial(const Rational& r, unsigned m) {
  return Rational::risingFactorial(r, m);
}

// Cost guard for memo growth (arbitrary precision cannot overflow, but cost
// can). Exceeding the limit throws std::length_error.
unsigned stirlingLimit();
void setStirlingLimit(unsigned nMax);

// Exhaustive Broder-definition oracle, unshifted indices: counts permutations
// of {1..n} with k cycles (First) or partitions of {1..n} into k non-empty
// blocks (Second) such that the elements 1..r lie in distinct cycles/blocks.
// Rejects n > 10 with std::invalid_argument.
enum class BruteKind { First, Second };
Rational bruteStirling(BruteKind kind, unsigned n, unsigned k, unsigned r);

} // namespace conesum

#endif
