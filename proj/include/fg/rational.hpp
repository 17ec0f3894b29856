#pragma once

#include <boost/rational.hpp>
#include <string>

namespace fg {

// exact rational arithmetic for all certified values
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline long long ceil_rational(const Rational& r) {
  long long p = r.numerator(), q = r.denominator();  // q > 0
  long long d = p / q;
  if (p % q != 0 && p > 0) ++d;
  return d;
}

}  // namespace fg
