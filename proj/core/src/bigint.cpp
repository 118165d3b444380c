#include "entcol/bigint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace entcol {

namespace {

// Keeps the 64 leading bits of x, returning them with the discarded shift.
std::pair<double, long> leading_bits(const BigInt& x) {
  const long bits = static_cast<long>(boost::multiprecision::msb(x)) + 1;
  const long shift = bits > 64 ? bits - 64 : 0;
  const BigInt top = x >> shift;
  return {static_cast<double>(static_cast<unsigned long long>(top)), shift};
}

}  // namespace

double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw std::domain_error("ratio_to_double: nonpositive denominator");
  if (num == 0) return 0.0;
  const auto [n, ns] = leading_bits(num);
  const auto [d, ds] = leading_bits(den);
  return std::ldexp(n / d, static_cast<int>(ns - ds));
}

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_big: nonpositive argument");
  const auto [v, shift] = leading_bits(x);
  return std::log(v) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace entcol
