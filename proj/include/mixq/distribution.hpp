#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>

#include "mixq/errors.hpp"
#include "mixq/extended_real.hpp"
#include "mixq/number.hpp"

namespace mixq {

template <class T>
struct Atom {
  T location;
  T mass;
};

/// CDF rises linearly by `rise` across [left, right].
template <class T>
struct Segment {
  T left;
  T right;
  T rise;
};

/// Answer to "is there z < x with F(z) = F(x-)?".
template <class T>
struct Flatness {
  bool flat = false;
  std::optional<T> witness;
};

template <class T>
struct SupportBounds {
  Extended<T> lower;
  Extended<T> upper;
};

template <class T>
void require_level(const T& p, const char* name) {
  if (p < T(0) || p > T(1)) {
    throw DomainError(fmt::format("{} = {} is outside [0, 1]", name, format_number(p)));
  }
}

/// Witness for a plateau (b, x) ending at x; b absent means F vanishes left of x.
template <class T>
T plateau_witness(const std::optional<T>& plateau_start, const T& x) {
  T one_below = x - T(1);
  if (!plateau_start || *plateau_start < one_below) return one_below;
  return (*plateau_start + x) / T(2);
}

/// A distribution made of point masses and linear CDF segments. The CDF is
/// evaluated through a precomputed knot table: one entry per distinct
/// breakpoint with F(x-) and F(x), plus whether F rises on the open interval
/// to the next knot.
///
/// With T = Rational every query is exact, which is what makes the equality
/// conditions of the mixture case table decidable.
template <class T>
class BasicPiecewise {
 public:
  using Scalar = T;

  struct Knot {
    T x;
    T left;   // F(x-)
    T right;  // F(x)
    bool rising_after = false;
  };

  BasicPiecewise(std::vector<Atom<T>> atoms, std::vector<Segment<T>> segments)
      : atoms_(std::move(atoms)), segments_(std::move(segments)) {
    validate();
    build_knots();
  }

  static BasicPiecewise point_mass(const T& location) {
    return BasicPiecewise({{location, T(1)}}, {});
  }
  static BasicPiecewise uniform(const T& a, const T& b) {
    return BasicPiecewise({}, {{a, b, T(1)}});
  }

  const std::vector<Atom<T>>& atoms() const { return atoms_; }
  const std::vector<Segment<T>>& segments() const { return segments_; }
  const std::vector<Knot>& knots() const { return knots_; }

  T cdf(const T& x) const {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                               [](const T& v, const Knot& k) { return v < k.x; });
    if (it == knots_.begin()) return T(0);
    const Knot& k = *std::prev(it);
    if (k.x == x || !k.rising_after) return k.right;
    const Knot& next = *it;
    return k.right + (next.left - k.right) * (x - k.x) / (next.x - k.x);
  }

  T cdf_left_limit(const T& x) const {
    if (const Knot* k = knot_at(x)) return k->left;
    return cdf(x);
  }

  Extended<T> quantile(const T& p) const {
    require_level(p, "p");
    if (p == T(0)) return Extended<T>::negative_infinity();
    auto it = std::partition_point(knots_.begin(), knots_.end(),
                                   [&](const Knot& k) { return k.right < p; });
    if (it == knots_.end()) return Extended<T>::positive_infinity();
    if (it == knots_.begin()) return it->x;
    const Knot& prev = *std::prev(it);
    if (!prev.rising_after || it->left <= p) return it->x;
    return prev.x + (it->x - prev.x) * (p - prev.right) / (it->left - prev.right);
  }

  bool is_continuous_at(const T& x) const {
    const Knot* k = knot_at(x);
    return k == nullptr || k->left == k->right;
  }

  Flatness<T> flat_left_of(const T& x) const {
    auto it = std::lower_bound(knots_.begin(), knots_.end(), x,
                               [](const Knot& k, const T& v) { return k.x < v; });
    if (it == knots_.begin()) return {true, plateau_witness<T>(std::nullopt, x)};
    const Knot& below = *std::prev(it);
    if (below.rising_after) return {false, std::nullopt};
    return {true, plateau_witness<T>(below.x, x)};
  }

  SupportBounds<T> support_bounds() const { return {knots_.front().x, knots_.back().x}; }

  /// Distinct CDF values taken at breakpoints, ascending (always includes 0
  /// and 1). The quantile function is linear between consecutive entries.
  std::vector<T> level_knots() const {
    std::vector<T> levels;
    levels.reserve(2 * knots_.size());
    for (const Knot& k : knots_) {
      levels.push_back(k.left);
      levels.push_back(k.right);
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
  }

  template <class U>
  friend class BasicPiecewise;

  /// Same distribution in another scalar type. Knot levels are converted
  /// from the exact table so the top level stays exactly 1.
  template <class U, class Convert>
  BasicPiecewise<U> convert(Convert&& to) const {
    BasicPiecewise<U> out;
    for (const auto& a : atoms_) out.atoms_.push_back({to(a.location), to(a.mass)});
    for (const auto& s : segments_) out.segments_.push_back({to(s.left), to(s.right), to(s.rise)});
    for (const auto& k : knots_) {
      out.knots_.push_back({to(k.x), to(k.left), to(k.right), k.rising_after});
    }
    return out;
  }

 private:
  BasicPiecewise() = default;

  const Knot* knot_at(const T& x) const {
    auto it = std::lower_bound(knots_.begin(), knots_.end(), x,
                               [](const Knot& k, const T& v) { return k.x < v; });
    return (it != knots_.end() && it->x == x) ? &*it : nullptr;
  }

  void validate() const {
    if (atoms_.empty() && segments_.empty()) throw DomainError("distribution has no mass");
    T total(0);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (!(atoms_[i].mass > T(0))) throw DomainError("atom mass must be positive");
      if (i > 0 && !(atoms_[i - 1].location < atoms_[i].location)) {
        throw DomainError("atom locations must be strictly increasing");
      }
      total += atoms_[i].mass;
    }
    for (std::size_t i = 0; i < segments_.size(); ++i) {
      const auto& s = segments_[i];
      if (!(s.left < s.right)) throw DomainError("segment needs left < right");
      if (!(s.rise > T(0))) throw DomainError("segment rise must be positive");
      if (i > 0 && segments_[i - 1].right > s.left) {
        throw DomainError("segments must be sorted with disjoint interiors");
      }
      total += s.rise;
    }
    if (!Tolerance<T>::same_level(total, T(1))) {
      throw DomainError(fmt::format("total mass is {}, expected 1", format_number(total)));
    }
  }

  void build_knots() {
    std::vector<T> xs;
    for (const auto& a : atoms_) xs.push_back(a.location);
    for (const auto& s : segments_) {
      xs.push_back(s.left);
      xs.push_back(s.right);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    knots_.reserve(xs.size());
    std::size_t atom = 0;
    std::size_t seg = 0;
    T cumulative(0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Knot k{xs[i], cumulative, cumulative, false};
      if (atom < atoms_.size() && atoms_[atom].location == xs[i]) k.right += atoms_[atom++].mass;
      while (seg < segments_.size() && !(xs[i] < segments_[seg].right)) ++seg;
      if (i + 1 < xs.size() && seg < segments_.size() && !(xs[i] < segments_[seg].left)) {
        const auto& s = segments_[seg];
        k.rising_after = true;
        cumulative = k.right + s.rise * (xs[i + 1] - xs[i]) / (s.right - s.left);
      } else {
        cumulative = k.right;
      }
      knots_.push_back(std::move(k));
    }
    if constexpr (!Tolerance<T>::kExact) knots_.back().right = T(1);
  }

  std::vector<Atom<T>> atoms_;
  std::vector<Segment<T>> segments_;
  std::vector<Knot> knots_;
};

using PiecewiseDistribution = BasicPiecewise<Rational>;
using FloatPiecewise = BasicPiecewise<double>;

FloatPiecewise to_float(const PiecewiseDistribution& d);

enum class Family { kUniform, kNormal, kExponential, kLognormal };

std::string family_name(Family family);

/// Closed-form continuous families, evaluated in double precision. Flatness
/// comes from family metadata: every family here is strictly increasing on
/// the interior of its support.
class ParametricDistribution {
 public:
  using Scalar = double;

  static ParametricDistribution uniform(double a, double b);
  static ParametricDistribution normal(double mu, double sigma);
  static ParametricDistribution exponential(double lambda);
  static ParametricDistribution lognormal(double mu, double sigma);

  Family family() const { return family_; }
  double first() const { return first_; }
  double second() const { return second_; }
  bool strictly_increasing() const { return true; }

  double cdf(double x) const;
  double cdf_left_limit(double x) const { return cdf(x); }
  Extended<double> quantile(double p) const;
  bool is_continuous_at(double) const { return true; }
  Flatness<double> flat_left_of(double x) const;
  SupportBounds<double> support_bounds() const;

  /// Density, used by statistical checks only.
  double density(double x) const;

 private:
  ParametricDistribution(Family family, double first, double second)
      : family_(family), first_(first), second_(second) {}

  Family family_;
  double first_;
  double second_;
};

/// Double-precision view over either kind of component; used for mixed
/// piecewise/parametric pairs and for sampling.
class FloatDistribution {
 public:
  using Scalar = double;
  using Variant = std::variant<FloatPiecewise, ParametricDistribution>;

  FloatDistribution(FloatPiecewise d) : impl_(std::move(d)) {}          // NOLINT
  FloatDistribution(ParametricDistribution d) : impl_(std::move(d)) {}  // NOLINT

  const Variant& variant() const { return impl_; }

  double cdf(double x) const { return std::visit([&](const auto& d) { return d.cdf(x); }, impl_); }
  double cdf_left_limit(double x) const {
    return std::visit([&](const auto& d) { return d.cdf_left_limit(x); }, impl_);
  }
  Extended<double> quantile(double p) const {
    return std::visit([&](const auto& d) { return d.quantile(p); }, impl_);
  }
  bool is_continuous_at(double x) const {
    return std::visit([&](const auto& d) { return d.is_continuous_at(x); }, impl_);
  }
  Flatness<double> flat_left_of(double x) const {
    return std::visit([&](const auto& d) { return d.flat_left_of(x); }, impl_);
  }
  SupportBounds<double> support_bounds() const {
    return std::visit([](const auto& d) { return d.support_bounds(); }, impl_);
  }

 private:
  Variant impl_;
};

/// A component as written in a spec document: exact piecewise or parametric.
class Distribution {
 public:
  Distribution(PiecewiseDistribution d) : impl_(std::move(d)) {}        // NOLINT
  Distribution(ParametricDistribution d) : impl_(std::move(d)) {}       // NOLINT

  bool is_piecewise() const { return std::holds_alternative<PiecewiseDistribution>(impl_); }
  const PiecewiseDistribution& piecewise() const { return std::get<PiecewiseDistribution>(impl_); }
  const ParametricDistribution& parametric() const {
    return std::get<ParametricDistribution>(impl_);
  }
  FloatDistribution to_float() const;

 private:
  std::variant<PiecewiseDistribution, ParametricDistribution> impl_;
};

}  // namespace mixq
