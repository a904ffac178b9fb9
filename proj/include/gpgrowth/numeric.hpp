#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpgrowth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num/den", or "num" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

Rational parse_rational(const std::string& text);

}  // namespace gpgrowth
