// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace treeidx {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Integer& value) { return value.str(); }

/// "p/q" in lowest terms, or just "p" when the denominator is one.
inline std::string to_decimal(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace treeidx
