#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mixq/mixq.hpp"

namespace mixq::testing {

inline Rational R(const char* text) { return parse_rational(text); }

inline PiecewiseDistribution piecewise(std::vector<std::pair<const char*, const char*>> atoms,
                                       std::vector<std::vector<const char*>> segments = {}) {
  std::vector<Atom<Rational>> a;
  for (const auto& [x, m] : atoms) a.push_back({R(x), R(m)});
  std::vector<Segment<Rational>> s;
  for (const auto& seg : segments) s.push_back({R(seg[0]), R(seg[1]), R(seg[2])});
  return PiecewiseDistribution(std::move(a), std::move(s));
}

inline PiecewiseDistribution point(const char* x) { return PiecewiseDistribution::point_mass(R(x)); }
inline PiecewiseDistribution uniform(const char* a, const char* b) {
  return PiecewiseDistribution::uniform(R(a), R(b));
}

inline ExactMixture mix(const char* q, PiecewiseDistribution x, PiecewiseDistribution y) {
  return {R(q), std::move(x), std::move(y)};
}

inline FloatMixture fmix(double q, ParametricDistribution x, ParametricDistribution y) {
  return {q, FloatDistribution(x), FloatDistribution(y)};
}

/// Random lattice distribution for property tests, independent of the suite
/// generator: atoms and segments on a grid of halves.
inline PiecewiseDistribution random_lattice(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> weight(1, 5);
  const int span = 2 + static_cast<int>(rng() % 5);
  std::vector<std::pair<int, int>> atoms;
  std::vector<std::pair<int, int>> segs;
  for (int i = 0; i <= span; ++i) {
    if (coin(rng)) atoms.emplace_back(i, weight(rng));
    if (i < span && coin(rng)) segs.emplace_back(i, weight(rng));
  }
  if (atoms.empty() && segs.empty()) atoms.emplace_back(0, 1);
  long total = 0;
  for (auto& a : atoms) total += a.second;
  for (auto& s : segs) total += s.second;
  std::vector<Atom<Rational>> a;
  for (auto& [i, w] : atoms) a.push_back({Rational(i, 2), Rational(w, total)});
  std::vector<Segment<Rational>> s;
  for (auto& [i, w] : segs) s.push_back({Rational(i, 2), Rational(i + 1, 2), Rational(w, total)});
  return PiecewiseDistribution(std::move(a), std::move(s));
}

}  // namespace mixq::testing
