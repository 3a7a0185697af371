#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gk {

using Integer = boost::multiprecision::cpp_int;

inline Integer ipow(const Integer& base, unsigned exp) {
  Integer r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline Integer igcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace gk
