#include "mixq/number.hpp"

#include <fmt/format.h>

#include <cctype>

#include "mixq/errors.hpp"

namespace mixq {
namespace {

using boost::multiprecision::mpz_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void reject(std::string_view text, std::string_view why) {
  throw ParseError(fmt::format("invalid number '{}': {}", text, why));
}

// mpz_int's string constructor reads a leading 0 as octal.
mpz_int decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return mpz_int{std::string(digits.substr(first))};
}

Rational parse_fraction(std::string_view text, std::size_t slash) {
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) reject(text, "malformed fraction");
  mpz_int d = decimal_integer(den);
  if (d == 0) reject(text, "zero denominator");
  Rational r(decimal_integer(num), d);
  return negative ? Rational(-r) : r;
}

mpz_int pow10(long n) {
  mpz_int result = 1;
  for (long i = 0; i < n; ++i) result *= 10;
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text, bool allow_exponent) {
  if (text.empty()) reject(text, "empty");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return parse_fraction(text, slash);
  }

  std::string_view rest = text;
  bool negative = false;
  if (rest.front() == '-' || rest.front() == '+') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    if (!allow_exponent) reject(text, "exponent notation not allowed here");
    std::string_view exp_text = rest.substr(e + 1);
    rest = rest.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) reject(text, "malformed exponent");
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = rest;
  std::string_view frac_part;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    int_part = rest.substr(0, dot);
    frac_part = rest.substr(dot + 1);
    if (!frac_part.empty() && !all_digits(frac_part)) reject(text, "malformed fraction digits");
  }
  if (!int_part.empty() && !all_digits(int_part)) reject(text, "malformed integer digits");
  if (int_part.empty() && frac_part.empty()) reject(text, "no digits");

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_int mantissa = decimal_integer(digits);
  long scale = static_cast<long>(frac_part.size()) - exponent;
  Rational r = scale >= 0 ? Rational(mantissa, pow10(scale))
                          : Rational(mantissa * pow10(-scale));
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
  mpz_int num = boost::multiprecision::numerator(value);
  mpz_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  mpz_int rest = den;
  long twos = 0;
  long fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  long places = std::max(twos, fives);
  bool negative = num < 0;
  mpz_int scaled = (negative ? mpz_int(-num) : num) * pow10(places) / den;
  std::string digits = scaled.str();
  if (static_cast<long>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return negative ? "-" + digits : digits;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw ParseError("non-finite value has no rational form");
  return parse_rational(fmt::format("{}", value), /*allow_exponent=*/true);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{}", value);
}

}  // namespace mixq
