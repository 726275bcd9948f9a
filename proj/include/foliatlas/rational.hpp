#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace foliatlas {

// All coefficients in the toolkit are exact rationals with arbitrary
// precision numerator/denominator.  Floating point never enters.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

bool is_integer(const Rational& q);

// Converts an integral rational to long long; throws DataError otherwise.
long long to_int64(const Rational& q);

// Renders "a" or "a/b", never scientific notation.
std::string to_string(const Rational& q);

// Combinatorial binomial coefficient: 0 whenever k < 0 or n < k.
// This is the convention dimension counts use (h^0 of a negative twist is 0).
long long binom(long long n, long long k);

// Generalized binomial (n may be negative): product formula n(n-1)...(n-k+1)/k!.
// Used by the Chern-class twist expansion, where virtual ranks occur.
long long gbinom(long long n, long long k);

} // namespace foliatlas
