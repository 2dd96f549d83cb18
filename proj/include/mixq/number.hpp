#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <string>
#include <string_view>

namespace mixq {

// Exact rational arithmetic for the piecewise class. Expression templates are
// disabled so `auto` always binds to a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "-1.25", "3", "0.125" or "7/3" into an exact rational. Exponent
/// notation ("1e-3") is accepted only when `allow_exponent` is set.
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text, bool allow_exponent = false);

/// Terminating rationals print as plain decimals ("0.75", "-3"); all others as
/// "num/den". parse_rational(format_rational(r)) == r for every r.
std::string format_rational(const Rational& value);

/// The decimal a human would write for `value` (shortest round-trip form),
/// read back exactly. 0.1 maps to 1/10, not to the binary fraction.
Rational rational_from_double(double value);

double to_double(const Rational& value);

/// Shortest round-trip decimal for a double; "inf"/"-inf"/"nan" otherwise.
std::string format_double(double value);

// Comparison policy per scalar type. Rationals compare exactly; doubles use
// 1e-12 on probability levels and 1e-9 on quantile values.
template <class T>
struct Tolerance;

template <>
struct Tolerance<Rational> {
  static constexpr bool kExact = true;
  static bool same_level(const Rational& a, const Rational& b) { return a == b; }
  static bool same_value(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct Tolerance<double> {
  static constexpr bool kExact = false;
  static constexpr double kLevel = 1e-12;
  static constexpr double kValue = 1e-9;
  static bool same_level(double a, double b) { return std::fabs(a - b) <= kLevel; }
  static bool same_value(double a, double b) { return std::fabs(a - b) <= kValue; }
};

inline std::string format_number(const Rational& value) { return format_rational(value); }
inline std::string format_number(double value) { return format_double(value); }

}  // namespace mixq
