#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace memdom {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// n! for n >= 0.
BigInt factorial(unsigned n);

/// Double factorial n!! with the conventions (-1)!! = 0!! = 1.
/// Throws std::domain_error for n < -1.
BigInt double_factorial(long n);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Falling factorial n (n-1) ... (n-m+1); equals n!/(n-m)! for m <= n, 0 for m > n.
BigInt falling_factorial(unsigned n, unsigned m);

/// Number of domino tilings of the 2 x k array: 1, 1, 2, 3, 5, 8, ...
BigInt tiling_count(unsigned k);

/// Fixed-point decimal rendering of an exact rational with `digits` fractional
/// digits, truncated toward zero. Intended for reports, not computation.
std::string decimal_string(const BigRat& r, unsigned digits);

}  // namespace memdom
