#pragma once

#include <cstdint>
#include <vector>

#include "mixq/distribution.hpp"

namespace mixq {

/// S = I*X + (1-I)*Y with I ~ Bernoulli(q) independent of X and Y.
template <class D>
struct BasicMixture {
  using Scalar = typename D::Scalar;
  Scalar q;
  D x;
  D y;
};

using ExactMixture = BasicMixture<PiecewiseDistribution>;
using FloatMixture = BasicMixture<FloatDistribution>;

/// A mixture as read from a spec document. q is always exact; the components
/// decide whether the exact or the double-precision path applies.
struct MixtureSpec {
  Rational q;
  Distribution x;
  Distribution y;

  MixtureSpec(Rational q, Distribution x, Distribution y);

  bool is_exact() const { return x.is_piecewise() && y.is_piecewise(); }
  bool is_parametric() const { return !x.is_piecewise() && !y.is_piecewise(); }
  ExactMixture exact() const;
  FloatMixture to_float() const;
  MixtureSpec swapped() const { return {Rational(1 - q), y, x}; }
};

template <class D>
BasicMixture<D> swapped(const BasicMixture<D>& m) {
  using T = typename D::Scalar;
  return {T(T(1) - m.q), m.y, m.x};
}

template <class D>
typename D::Scalar mixture_cdf(const BasicMixture<D>& m, const typename D::Scalar& x) {
  using T = typename D::Scalar;
  return m.q * m.x.cdf(x) + (T(1) - m.q) * m.y.cdf(x);
}

template <class D>
typename D::Scalar mixture_cdf_left_limit(const BasicMixture<D>& m,
                                          const typename D::Scalar& x) {
  using T = typename D::Scalar;
  return m.q * m.x.cdf_left_limit(x) + (T(1) - m.q) * m.y.cdf_left_limit(x);
}

/// The law of S as a single piecewise distribution: scaled atoms merged by
/// location, segments split at every breakpoint of either component and their
/// scaled rises summed.
PiecewiseDistribution mixture_distribution(const ExactMixture& m);

/// s_p = inf{x : q F(x) + (1-q) G(x) >= p}, by inverting the merged law. This
/// route never looks at the split (alpha, beta) and serves as the oracle for
/// the split formula. Requires 0 < p < 1.
ExactReal direct_quantile(const ExactMixture& m, const Rational& p);

/// Same definition, solved by monotone bisection on x to 1e-12.
Extended<double> direct_quantile(const FloatMixture& m, double p);

/// Dispatches on component kinds; mixed piecewise/parametric pairs are
/// rejected (use the grid oracle for those).
ExactReal direct_quantile_exact(const MixtureSpec& m, const Rational& p);
Extended<double> direct_quantile_float(const MixtureSpec& m, const Rational& p);

/// n draws of S from a seeded 64-bit Mersenne Twister: one uniform picks the
/// component, a second is pushed through that component's quantile.
std::vector<double> sample(const FloatMixture& m, std::size_t n, std::uint64_t seed);
std::vector<double> sample(const MixtureSpec& m, std::size_t n, std::uint64_t seed);

}  // namespace mixq
