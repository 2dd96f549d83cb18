#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "mixq/mixture.hpp"

namespace mixq {

/// A split of the level p as q*alpha + (1-q)*beta = p.
template <class T>
struct SplitPoint {
  T alpha;
  T beta;
  bool clamped = false;  // ordering predicate held nowhere on the feasible range
};

template <class T>
struct QuantileSolution {
  Extended<T> s_p;
  T alpha_star;
  T beta_star;
  Extended<T> x_quantile;  // F_X^-1(alpha*)
  Extended<T> y_quantile;  // F_Y^-1(beta*)
  bool x_attains = false;
  bool y_attains = false;
  bool clamped = false;
};

namespace detail {

template <class T>
void require_split_domain(const T& q, const T& p) {
  if (!(q > T(0) && q < T(1))) {
    throw DomainError(fmt::format("split needs 0 < q < 1, got q = {}", format_number(q)));
  }
  if (!(p > T(0) && p < T(1))) {
    throw DomainError(fmt::format("split needs 0 < p < 1, got p = {}", format_number(p)));
  }
}

template <class T>
T beta_for(const T& q, const T& p, const T& alpha) {
  return (p - q * alpha) / (T(1) - q);
}

}  // namespace detail

/// Closed range of alpha for which beta = (p - q alpha)/(1 - q) stays in [0,1].
template <class T>
std::pair<T, T> feasible_alpha_range(const T& q, const T& p) {
  detail::require_split_domain(q, p);
  T lo = (p - (T(1) - q)) / q;
  T hi = p / q;
  return {lo < T(0) ? T(0) : lo, hi > T(1) ? T(1) : hi};
}

/// F_X^-1(alpha) >= F_Y^-1(beta(alpha)) in the extended order. Nondecreasing
/// in alpha: false on a lower part of the feasible range, true above it.
template <class D>
bool ordering_predicate(const BasicMixture<D>& m, const typename D::Scalar& p,
                        const typename D::Scalar& alpha) {
  using T = typename D::Scalar;
  T beta = detail::beta_for(m.q, p, alpha);
  // Clamp rounding spill at the range ends in the double path.
  if constexpr (!Tolerance<T>::kExact) beta = std::clamp(beta, T(0), T(1));
  return m.x.quantile(alpha) >= m.y.quantile(beta);
}

namespace detail {

// Exact infimum. Between consecutive candidate levels both quantile
// functions are linear in alpha, so the crossing of
// h(alpha) = F_X^-1(alpha) - F_Y^-1(beta(alpha)) is either a candidate or the
// root of a linear function on the open interval just before the first
// candidate where the predicate holds.
template <class D>
typename D::Scalar exact_infimum(const BasicMixture<D>& m, const typename D::Scalar& p,
                                 const typename D::Scalar& lo, const typename D::Scalar& hi) {
  using T = typename D::Scalar;
  std::vector<T> candidates{lo, hi};
  for (const T& a : m.x.level_knots()) {
    if (lo < a && a < hi) candidates.push_back(a);
  }
  for (const T& b : m.y.level_knots()) {
    T a = (p - (T(1) - m.q) * b) / m.q;
    if (lo < a && a < hi) candidates.push_back(a);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto first_true = std::partition_point(candidates.begin(), candidates.end(), [&](const T& a) {
    return !ordering_predicate(m, p, a);
  });
  // Caller guarantees pred(lo) false and pred(hi) true.
  const T& right = *first_true;
  const T& left = *std::prev(first_true);

  auto gap = [&](const T& a) {
    return m.x.quantile(a).value() - m.y.quantile(beta_for(m.q, p, a)).value();
  };
  const T third = (right - left) / T(3);
  const T a1 = left + third;
  const T a2 = right - third;
  const T h1 = gap(a1);
  const T h2 = gap(a2);
  if (h2 < h1) throw InternalContradiction("ordering gap decreases in alpha");
  if (h1 == h2) return h1 >= T(0) ? left : right;
  T root = a1 - h1 * (a2 - a1) / (h2 - h1);
  if (root < left) return left;
  if (root > right) return right;
  return root;
}

// Double path: bisection down to adjacent doubles (at most 200 steps),
// keeping the bracket end whose max-quantile is smaller.
template <class D>
typename D::Scalar bisect_infimum(const BasicMixture<D>& m, const typename D::Scalar& p,
                                  typename D::Scalar lo, typename D::Scalar hi) {
  using T = typename D::Scalar;
  for (int i = 0; i < 200; ++i) {
    T mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (ordering_predicate(m, p, mid) ? hi : lo) = mid;
  }
  auto worst = [&](const T& a) {
    T beta = std::clamp(beta_for(m.q, p, a), T(0), T(1));
    return mixq::max(m.x.quantile(a), m.y.quantile(beta));
  };
  return worst(lo) < worst(hi) ? lo : hi;
}

}  // namespace detail

/// alpha* = inf{alpha in the closed feasible range : F_X^-1(alpha) >=
/// F_Y^-1(beta)}, with beta* = (p - q alpha*)/(1 - q). When the predicate
/// fails everywhere, alpha* is the top of the range and `clamped` is set.
template <class D>
SplitPoint<typename D::Scalar> alpha_star(const BasicMixture<D>& m, const typename D::Scalar& p) {
  using T = typename D::Scalar;
  auto [lo, hi] = feasible_alpha_range(m.q, p);
  auto split = [&](const T& a, bool clamped) {
    T beta = detail::beta_for(m.q, p, a);
    if constexpr (!Tolerance<T>::kExact) beta = std::clamp(beta, T(0), T(1));
    return SplitPoint<T>{a, beta, clamped};
  };
  if (ordering_predicate(m, p, lo)) return split(lo, false);
  if (!ordering_predicate(m, p, hi)) return split(hi, true);
  if constexpr (Tolerance<T>::kExact) {
    return split(detail::exact_infimum(m, p, lo, hi), false);
  } else {
    return split(detail::bisect_infimum(m, p, lo, hi), false);
  }
}

/// s_p = max{F_X^-1(alpha*), F_Y^-1(beta*)}. For q = 1 (q = 0) the dead
/// component gets level 0, whose quantile is -inf, so the formula reduces to
/// the live component's quantile at p.
template <class D>
QuantileSolution<typename D::Scalar> theorem_quantile(const BasicMixture<D>& m,
                                                      const typename D::Scalar& p) {
  using T = typename D::Scalar;
  require_level(m.q, "q");
  if (!(p > T(0) && p < T(1))) {
    throw DomainError(fmt::format("p = {} must lie strictly between 0 and 1", format_number(p)));
  }

  SplitPoint<T> split;
  if (m.q == T(1)) {
    split = {p, T(0), false};
  } else if (m.q == T(0)) {
    split = {T(0), p, false};
  } else {
    split = alpha_star(m, p);
  }

  QuantileSolution<T> sol{
      .s_p = T(0),
      .alpha_star = split.alpha,
      .beta_star = split.beta,
      .x_quantile = m.x.quantile(split.alpha),
      .y_quantile = m.y.quantile(split.beta),
      .clamped = split.clamped,
  };
  sol.s_p = mixq::max(sol.x_quantile, sol.y_quantile);
  sol.x_attains = same_value(sol.x_quantile, sol.s_p);
  sol.y_attains = same_value(sol.y_quantile, sol.s_p);
  if (!sol.s_p.is_finite()) throw InternalContradiction("mixture quantile is infinite for p in (0,1)");
  return sol;
}

}  // namespace mixq
