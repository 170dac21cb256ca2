#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace matchc {

// Exact arithmetic used throughout: dimensions at n = 24 (24! ~ 6.2e23) and
// class sizes overflow 64-bit, so all dimension-like quantities are big ints.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient; 0 for k < 0 or k > n.
BigInt binomial(long n, long k);

// n! as a big integer.
BigInt factorial(long n);

}  // namespace matchc
