#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace finetree {

// All counts in this library are exact; cpp_int keeps them exact well past
// any depth the enumeration limits allow.
using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient C(n, k), zero outside the triangle (negative n or k,
// or k > n). Multiplicative evaluation, every intermediate division exact.
BigInt binom(long long n, long long k);

}  // namespace finetree
