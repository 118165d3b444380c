#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace entcol {

/// Arbitrary-precision nonnegative counts and cycle indices.
using BigInt = boost::multiprecision::cpp_int;

/// num/den as a double, exact to double precision even when both operands
/// are far beyond the double range.
double ratio_to_double(const BigInt& num, const BigInt& den);

/// Natural logarithm of a positive big integer.
double log_big(const BigInt& x);

}  // namespace entcol
