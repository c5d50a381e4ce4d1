#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace negaz4 {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned long exponent) {
  BigInt r = 1;
  r <<= exponent;
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace negaz4
