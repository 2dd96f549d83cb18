#include "mixq/mixture.hpp"

#include <cmath>
#include <map>
#include <random>

namespace mixq {
namespace {

void require_open_level(const Rational& p) {
  if (!(p > 0 && p < 1)) {
    throw DomainError(fmt::format("p = {} must lie strictly between 0 and 1", format_rational(p)));
  }
}

// Uniform on the open interval (0, 1) from the top 53 bits.
double open_unit(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

// Scaled share of one component's segments falling inside [lo, hi].
void add_segment_share(const std::vector<Segment<Rational>>& segments, const Rational& weight,
                       const Rational& lo, const Rational& hi, Rational& rise) {
  for (const auto& s : segments) {
    if (!(s.left < hi) || !(lo < s.right)) continue;
    Rational a = s.left < lo ? lo : s.left;
    Rational b = hi < s.right ? hi : s.right;
    rise += weight * s.rise * (b - a) / (s.right - s.left);
  }
}

}  // namespace

MixtureSpec::MixtureSpec(Rational q_, Distribution x_, Distribution y_)
    : q(std::move(q_)), x(std::move(x_)), y(std::move(y_)) {
  require_level(q, "q");
}

ExactMixture MixtureSpec::exact() const {
  if (!is_exact()) throw DomainError("exact path needs two piecewise components");
  return {q, x.piecewise(), y.piecewise()};
}

FloatMixture MixtureSpec::to_float() const { return {to_double(q), x.to_float(), y.to_float()}; }

PiecewiseDistribution mixture_distribution(const ExactMixture& m) {
  const Rational wx = m.q;
  const Rational wy = 1 - m.q;

  std::map<Rational, Rational> atoms;
  auto add_atoms = [&](const PiecewiseDistribution& d, const Rational& w) {
    if (w == 0) return;
    for (const auto& a : d.atoms()) atoms[a.location] += w * a.mass;
  };
  add_atoms(m.x, wx);
  add_atoms(m.y, wy);

  std::vector<Rational> cuts;
  auto add_cuts = [&](const PiecewiseDistribution& d, const Rational& w) {
    if (w == 0) return;
    for (const auto& s : d.segments()) {
      cuts.push_back(s.left);
      cuts.push_back(s.right);
    }
  };
  add_cuts(m.x, wx);
  add_cuts(m.y, wy);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Segment<Rational>> segments;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational rise = 0;
    if (wx != 0) add_segment_share(m.x.segments(), wx, cuts[i], cuts[i + 1], rise);
    if (wy != 0) add_segment_share(m.y.segments(), wy, cuts[i], cuts[i + 1], rise);
    if (rise > 0) segments.push_back({cuts[i], cuts[i + 1], rise});
  }

  std::vector<Atom<Rational>> atom_list;
  atom_list.reserve(atoms.size());
  for (auto& [location, mass] : atoms) atom_list.push_back({location, mass});
  return PiecewiseDistribution(std::move(atom_list), std::move(segments));
}

ExactReal direct_quantile(const ExactMixture& m, const Rational& p) {
  require_open_level(p);
  require_level(m.q, "q");
  return mixture_distribution(m).quantile(p);
}

Extended<double> direct_quantile(const FloatMixture& m, double p) {
  if (!(p > 0 && p < 1)) throw DomainError("p must lie strictly between 0 and 1");
  Extended<double> qx = m.x.quantile(p);
  Extended<double> qy = m.y.quantile(p);
  // Below both component quantiles both CDFs are under p, so s_p >= the
  // smaller one; at the larger one both are at least p.
  double lo = std::min(qx, qy).value();
  double hi = std::max(qx, qy).value();
  if (mixture_cdf(m, lo) >= p) return lo;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (mixture_cdf(m, mid) >= p ? hi : lo) = mid;
  }
  return hi;
}

ExactReal direct_quantile_exact(const MixtureSpec& m, const Rational& p) {
  return direct_quantile(m.exact(), p);
}

Extended<double> direct_quantile_float(const MixtureSpec& m, const Rational& p) {
  if (!m.is_parametric() && !m.is_exact()) {
    throw DomainError("direct inversion does not take mixed piecewise/parametric pairs");
  }
  return direct_quantile(m.to_float(), to_double(p));
}

std::vector<double> sample(const FloatMixture& m, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample size must be at least 1");
  std::mt19937_64 gen(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool from_x = open_unit(gen) < m.q;
    const double u = open_unit(gen);
    out.push_back((from_x ? m.x : m.y).quantile(u).value());
  }
  return out;
}

std::vector<double> sample(const MixtureSpec& m, std::size_t n, std::uint64_t seed) {
  return sample(m.to_float(), n, seed);
}

}  // namespace mixq
