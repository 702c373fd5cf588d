#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gtz {

// Exact rational coefficients. cpp_rational keeps the canonical form we rely
// on everywhere: reduced fraction, denominator > 0, unique zero.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// "num" for integers, "num/den" otherwise (den always positive).
inline std::string rational_str(const Rational& q) {
  BigInt num = rational_num(q);
  BigInt den = rational_den(q);
  std::string s = num.str();
  if (den != 1) {
    s += "/";
    s += den.str();
  }
  return s;
}

}  // namespace gtz
