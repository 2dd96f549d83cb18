#include "mixq/distribution.hpp"

#include <boost/math/distributions/exponential.hpp>
#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/uniform.hpp>

#include <cmath>

namespace mixq {
namespace {

template <class F>
auto with_boost(Family family, double first, double second, F&& f) {
  switch (family) {
    case Family::kUniform:
      return f(boost::math::uniform_distribution<double>(first, second));
    case Family::kNormal:
      return f(boost::math::normal_distribution<double>(first, second));
    case Family::kExponential:
      return f(boost::math::exponential_distribution<double>(first));
    case Family::kLognormal:
      return f(boost::math::lognormal_distribution<double>(first, second));
  }
  throw std::logic_error("unknown family");
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw DomainError(fmt::format("{} must be finite", name));
}

}  // namespace

FloatPiecewise to_float(const PiecewiseDistribution& d) {
  return d.convert<double>([](const Rational& r) { return to_double(r); });
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kUniform: return "uniform";
    case Family::kNormal: return "normal";
    case Family::kExponential: return "exponential";
    case Family::kLognormal: return "lognormal";
  }
  return "unknown";
}

ParametricDistribution ParametricDistribution::uniform(double a, double b) {
  require_finite(a, "a");
  require_finite(b, "b");
  if (!(a < b)) throw DomainError("uniform needs a < b");
  return {Family::kUniform, a, b};
}

ParametricDistribution ParametricDistribution::normal(double mu, double sigma) {
  require_finite(mu, "mu");
  if (!(sigma > 0) || !std::isfinite(sigma)) throw DomainError("normal needs sigma > 0");
  return {Family::kNormal, mu, sigma};
}

ParametricDistribution ParametricDistribution::exponential(double lambda) {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw DomainError("exponential needs lambda > 0");
  return {Family::kExponential, lambda, 0.0};
}

ParametricDistribution ParametricDistribution::lognormal(double mu, double sigma) {
  require_finite(mu, "mu");
  if (!(sigma > 0) || !std::isfinite(sigma)) throw DomainError("lognormal needs sigma > 0");
  return {Family::kLognormal, mu, sigma};
}

SupportBounds<double> ParametricDistribution::support_bounds() const {
  switch (family_) {
    case Family::kUniform: return {first_, second_};
    case Family::kNormal:
      return {Extended<double>::negative_infinity(), Extended<double>::positive_infinity()};
    case Family::kExponential:
    case Family::kLognormal: return {0.0, Extended<double>::positive_infinity()};
  }
  throw std::logic_error("unknown family");
}

double ParametricDistribution::cdf(double x) const {
  auto [lo, hi] = support_bounds();
  if (lo.is_finite() && x <= lo.value()) return 0.0;
  if (hi.is_finite() && x >= hi.value()) return 1.0;
  return with_boost(family_, first_, second_, [&](const auto& d) { return boost::math::cdf(d, x); });
}

double ParametricDistribution::density(double x) const {
  auto [lo, hi] = support_bounds();
  if (lo.is_finite() && x < lo.value()) return 0.0;
  if (hi.is_finite() && x > hi.value()) return 0.0;
  return with_boost(family_, first_, second_, [&](const auto& d) { return boost::math::pdf(d, x); });
}

Extended<double> ParametricDistribution::quantile(double p) const {
  require_level(p, "p");
  if (p == 0.0) return Extended<double>::negative_infinity();
  if (p == 1.0) return support_bounds().upper;
  return with_boost(family_, first_, second_,
                    [&](const auto& d) { return boost::math::quantile(d, p); });
}

Flatness<double> ParametricDistribution::flat_left_of(double x) const {
  auto [lo, hi] = support_bounds();
  if (lo.is_finite() && x <= lo.value()) return {true, plateau_witness<double>(std::nullopt, x)};
  if (hi.is_finite() && x > hi.value()) return {true, plateau_witness<double>(hi.value(), x)};
  return {false, std::nullopt};
}

FloatDistribution Distribution::to_float() const {
  if (is_piecewise()) return mixq::to_float(piecewise());
  return parametric();
}

}  // namespace mixq
