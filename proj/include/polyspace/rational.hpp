#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polyspace {

// All weight/coefficient arithmetic is exact: big integers and big rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Int floor_to_int(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int quo = n / d;
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

}  // namespace polyspace
