#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace teich {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline double to_double(const Rational& v) { return v.convert_to<double>(); }
inline double to_double(const Integer& v) { return v.convert_to<double>(); }

/// Parses "p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(text));
  return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

}  // namespace teich
