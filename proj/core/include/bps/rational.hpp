#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace bps {

// Exact arithmetic everywhere: the genericity condition and all Groebner
// computations are tie-sensitive, so no floating point is ever used.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& n) { return n.str(); }

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace bps
