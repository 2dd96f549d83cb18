#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixq/classifier.hpp"

namespace mixq {

template <class T>
struct GridOracleConfig {
  T lo;
  T hi;
  std::size_t steps = 1'000'000;  // grid points, endpoints included
};

/// Grid over the hull of both supports padded by one unit. Unbounded
/// parametric tails are cut at the 1e-15 / 1 - 1e-15 quantiles.
template <class D>
GridOracleConfig<typename D::Scalar> default_grid(const BasicMixture<D>& m,
                                                  std::size_t steps = 1'000'000) {
  using T = typename D::Scalar;
  auto lower = [](const D& d) {
    auto b = d.support_bounds().lower;
    if constexpr (Tolerance<T>::kExact) {
      return b.value();
    } else {
      return b.is_finite() ? b.value() : d.quantile(1e-15).value();
    }
  };
  auto upper = [](const D& d) {
    auto b = d.support_bounds().upper;
    if constexpr (Tolerance<T>::kExact) {
      return b.value();
    } else {
      return b.is_finite() ? b.value() : d.quantile(1 - 1e-15).value();
    }
  };
  T lo = std::min(lower(m.x), lower(m.y)) - T(1);
  T hi = std::max(upper(m.x), upper(m.y)) + T(1);
  return {lo, hi, steps};
}

template <class T>
T grid_step(const GridOracleConfig<T>& cfg) {
  return (cfg.hi - cfg.lo) / T(static_cast<long>(cfg.steps - 1));
}

/// Smallest grid point x with q F(x) + (1-q) G(x) >= p. Because F_S is
/// nondecreasing the first such point is located by bisection over grid
/// indices; the result lies within one step above the true s_p.
template <class D>
typename D::Scalar grid_oracle_quantile(const BasicMixture<D>& m, const typename D::Scalar& p,
                                        const GridOracleConfig<typename D::Scalar>& cfg) {
  using T = typename D::Scalar;
  if (!(cfg.lo < cfg.hi) || cfg.steps < 2) throw DomainError("grid needs lo < hi and steps >= 2");
  const T step = grid_step(cfg);
  auto point = [&](std::size_t i) {
    return i + 1 == cfg.steps ? cfg.hi : T(cfg.lo + step * T(static_cast<long>(i)));
  };
  auto reaches = [&](std::size_t i) { return mixture_cdf(m, point(i)) >= p; };
  if (!reaches(cfg.steps - 1)) throw DomainError("no grid point reaches level p");
  std::size_t lo = 0;
  std::size_t hi = cfg.steps - 1;
  if (reaches(lo)) return point(lo);
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    (reaches(mid) ? hi : lo) = mid;
  }
  return point(hi);
}

/// Order statistic of rank ceil(n p) among n seeded draws of S.
double monte_carlo_quantile(const FloatMixture& m, double p, std::size_t n, std::uint64_t seed);
double monte_carlo_quantile(const MixtureSpec& m, const Rational& p, std::size_t n,
                            std::uint64_t seed);

struct InstanceGenConfig {
  std::uint64_t seed = 20240601;
  int max_atoms = 4;
  int max_segments = 3;
  std::vector<Rational> q_grid;
  std::vector<Rational> p_grid;
  bool allow_coincident_breakpoints = true;
};

/// q on {1/5, 1/4, 1/3, 2/5, 1/2, 3/5, 2/3, 3/4, 4/5}, p on {1/10, ..., 9/10}.
InstanceGenConfig default_instance_config(std::uint64_t seed = 20240601);

struct GeneratedInstance {
  MixtureSpec mixture;
  Rational p;
};

/// Deterministic in (seed, index): instance k draws from its own stream.
/// Components live on a shared integer lattice so atoms coincide and
/// plateaus sit next to atoms; p is drawn from the level grid, from the
/// breakpoint levels of F_S, or from mixed component levels.
GeneratedInstance generate_instance(const InstanceGenConfig& cfg, std::uint64_t index);

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  bool exact = false;
  std::string cell;  // CaseLabel::id(), empty when not classified
  std::string theorem_sp;
  std::string direct_sp;
  std::string grid_sp;
  std::optional<double> deviation;  // |theorem - direct| on the double path
  std::vector<CheckItem> checks;

  bool passed() const;
  std::vector<std::string> failed_checks() const;
};

/// Runs the split formula, direct inversion, the grid oracle, classification,
/// table relations and the structural identities (sandwich, split identity,
/// bracketing, swap invariance, transposition). Failures are recorded, never
/// thrown. Mixed piecewise/parametric pairs get the subset that applies.
CheckReport cross_check(const MixtureSpec& m, const Rational& p);
CheckReport cross_check(const ExactMixture& m, const Rational& p);
CheckReport cross_check(const FloatMixture& m, double p, bool classifiable);

struct SuiteSummary {
  std::size_t instances = 0;
  std::map<std::string, std::size_t> census;  // CaseLabel::id() -> hits
  std::vector<std::pair<std::uint64_t, CheckReport>> reports;  // by index

  std::size_t failures() const;
  std::size_t impossible_hits() const;
};

/// cross_check over instances [0, count) of `cfg`, fanned out over `jobs`
/// threads; results are merged in index order.
SuiteSummary run_suite(const InstanceGenConfig& cfg, std::size_t count, unsigned jobs = 1);

}  // namespace mixq
