#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace uff {

// Exact arithmetic used throughout the bound computations.  Binomials up to
// C(64,32) still fit in 64 bits, but the upper-bound recursion multiplies by
// 2^n and leaves that range quickly, so everything is kept arbitrary
// precision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// C(n, k) by the multiplicative rule; 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// round(num/den, 2) with ties away from zero, formatted as "d.dd".
/// Exact integer arithmetic, so output is reproducible byte for byte.
std::string ratio_2dp(const BigInt& num, const BigInt& den);

}  // namespace uff
