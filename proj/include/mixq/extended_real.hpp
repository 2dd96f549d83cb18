#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include "mixq/number.hpp"

namespace mixq {

/// A real number or one of the two infinities, totally ordered as
/// -inf < finite < +inf. Quantiles return this type because
/// inf{empty set} = +inf and inf{R} = -inf.
template <class T>
class Extended {
 public:
  enum class Kind : int { kNegativeInfinity = -1, kFinite = 0, kPositiveInfinity = 1 };

  Extended(T value) : kind_(Kind::kFinite), value_(std::move(value)) {}  // NOLINT

  static Extended negative_infinity() { return Extended(Kind::kNegativeInfinity); }
  static Extended positive_infinity() { return Extended(Kind::kPositiveInfinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_negative_infinity() const { return kind_ == Kind::kNegativeInfinity; }
  bool is_positive_infinity() const { return kind_ == Kind::kPositiveInfinity; }

  const T& value() const {
    if (!is_finite()) throw std::logic_error("value() on an infinite ExtendedReal");
    return value_;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }

  friend std::weak_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) {
      return static_cast<int>(a.kind_) < static_cast<int>(b.kind_) ? std::weak_ordering::less
                                                                   : std::weak_ordering::greater;
    }
    if (!a.is_finite() || a.value_ == b.value_) return std::weak_ordering::equivalent;
    return a.value_ < b.value_ ? std::weak_ordering::less : std::weak_ordering::greater;
  }

 private:
  explicit Extended(Kind kind) : kind_(kind), value_() {}

  Kind kind_;
  T value_;
};

using ExactReal = Extended<Rational>;

template <class T>
const Extended<T>& max(const Extended<T>& a, const Extended<T>& b) {
  return a < b ? b : a;
}

/// Equality under the scalar's value tolerance; infinities match only
/// themselves.
template <class T>
bool same_value(const Extended<T>& a, const Extended<T>& b) {
  if (a.kind() != b.kind()) return false;
  return !a.is_finite() || Tolerance<T>::same_value(a.value(), b.value());
}

/// a > b, and not merely by less than the value tolerance.
template <class T>
bool clearly_greater(const Extended<T>& a, const Extended<T>& b) {
  return a > b && !same_value(a, b);
}

template <class T>
std::string to_string(const Extended<T>& x) {
  if (x.is_negative_infinity()) return "-inf";
  if (x.is_positive_infinity()) return "+inf";
  return format_number(x.value());
}

}  // namespace mixq
