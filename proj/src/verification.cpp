#include "mixq/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace mixq {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : gen_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  bool coin() { return (gen_() >> 63) != 0; }

 private:
  std::mt19937_64 gen_;
};

PiecewiseDistribution random_piecewise(Stream& rng, const InstanceGenConfig& cfg,
                                       const Rational& offset) {
  const std::size_t span = 2 + rng.below(3);  // lattice 0..span
  std::vector<std::pair<std::size_t, long>> atom_weights;
  std::vector<std::pair<std::size_t, long>> segment_weights;
  for (std::size_t i = 0; i <= span; ++i) {
    if (static_cast<int>(atom_weights.size()) < cfg.max_atoms && rng.coin()) {
      atom_weights.emplace_back(i, 1 + static_cast<long>(rng.below(4)));
    }
    if (i < span && static_cast<int>(segment_weights.size()) < cfg.max_segments && rng.coin()) {
      segment_weights.emplace_back(i, 1 + static_cast<long>(rng.below(4)));
    }
  }
  if (atom_weights.empty() && segment_weights.empty()) {
    if (rng.coin()) {
      atom_weights.emplace_back(rng.below(span + 1), 1);
    } else {
      segment_weights.emplace_back(rng.below(span), 1);
    }
  }

  long total = 0;
  for (const auto& [i, w] : atom_weights) total += w;
  for (const auto& [i, w] : segment_weights) total += w;

  std::vector<Atom<Rational>> atoms;
  for (const auto& [i, w] : atom_weights) {
    atoms.push_back({offset + static_cast<long>(i), Rational(w, total)});
  }
  std::vector<Segment<Rational>> segments;
  for (const auto& [i, w] : segment_weights) {
    segments.push_back({offset + static_cast<long>(i), offset + static_cast<long>(i + 1),
                        Rational(w, total)});
  }
  return PiecewiseDistribution(std::move(atoms), std::move(segments));
}

std::vector<Rational> open_levels(std::vector<Rational> levels) {
  std::erase_if(levels, [](const Rational& r) { return !(r > 0 && r < 1); });
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

template <class T>
bool leq(const T& a, const T& b) {
  if constexpr (Tolerance<T>::kExact) {
    return a <= b;
  } else {
    return a <= b + Tolerance<T>::kLevel;
  }
}

template <class T>
std::string range_text(const T& lo, const T& x, const T& hi) {
  return fmt::format("{} <= {} <= {}", format_number(lo), format_number(x), format_number(hi));
}

template <class D>
void add_structural_checks(CheckReport& report, const BasicMixture<D>& m,
                           const typename D::Scalar& p,
                           const QuantileSolution<typename D::Scalar>& sol) {
  using T = typename D::Scalar;
  const T& s = sol.s_p.value();
  const T left = mixture_cdf_left_limit(m, s);
  const T right = mixture_cdf(m, s);
  report.checks.push_back(
      {"sandwich", leq(left, p) && leq(p, right), range_text(left, p, right)});

  if (m.q > T(0) && m.q < T(1)) {
    const T combined = m.q * sol.alpha_star + (T(1) - m.q) * sol.beta_star;
    report.checks.push_back({"split_identity", Tolerance<T>::same_level(combined, p),
                             fmt::format("q*alpha + (1-q)*beta = {}", format_number(combined))});

    if (m.x.is_continuous_at(s)) {
      const T mid = (p - m.q * m.x.cdf(s)) / (T(1) - m.q);
      const T g_left = m.y.cdf_left_limit(s);
      const T g_right = m.y.cdf(s);
      report.checks.push_back({"sandwich_continuous_f", leq(g_left, mid) && leq(mid, g_right),
                               range_text(g_left, mid, g_right)});
    }

    const T f_left = m.x.cdf_left_limit(s);
    const T f_right = m.x.cdf(s);
    const T g_left = m.y.cdf_left_limit(s);
    const T g_right = m.y.cdf(s);
    const bool bracketed = leq(f_left, sol.alpha_star) && leq(sol.alpha_star, f_right) &&
                           leq(g_left, sol.beta_star) && leq(sol.beta_star, g_right);
    report.checks.push_back(
        {"bracketing", bracketed,
         range_text(f_left, sol.alpha_star, f_right) + "; " +
             range_text(g_left, sol.beta_star, g_right)});
  }

  report.checks.push_back({"attainment",
                           (sol.x_attains || sol.y_attains) &&
                               sol.s_p == mixq::max(sol.x_quantile, sol.y_quantile),
                           fmt::format("x_attains={} y_attains={}", sol.x_attains, sol.y_attains)});
}

template <class D>
void add_grid_check(CheckReport& report, const BasicMixture<D>& m, const typename D::Scalar& p,
                    const Extended<typename D::Scalar>& s_p) {
  using T = typename D::Scalar;
  try {
    const auto cfg = default_grid(m);
    const T grid = grid_oracle_quantile(m, p, cfg);
    const T step = grid_step(cfg);
    const T& s = s_p.value();
    report.grid_sp = format_number(grid);
    bool ok;
    if constexpr (Tolerance<T>::kExact) {
      ok = s <= grid && grid - s < step;
    } else {
      ok = s <= grid + Tolerance<T>::kValue && grid - s < step + Tolerance<T>::kValue;
    }
    report.checks.push_back({"grid_oracle", ok, fmt::format("grid {} step {}", report.grid_sp,
                                                            format_number(step))});
  } catch (const std::exception& e) {
    report.checks.push_back({"grid_oracle", false, e.what()});
  }
}

// Classification of (q, X, Y) and of the swapped mixture, with table relations.
// Labels are computed separately from classify() so transposition is checked
// even when a cell is rejected as impossible.
template <class D>
void add_classification_checks(CheckReport& report, const BasicMixture<D>& m,
                               const typename D::Scalar& p,
                               const QuantileSolution<typename D::Scalar>& sol) {
  using T = typename D::Scalar;
  if (!(m.q > T(0) && m.q < T(1))) return;
  const auto flipped = swapped(m);
  try {
    const CaseLabel label = case_label(m, p, sol.s_p.value());
    report.cell = label.id();
    const auto flipped_sol = theorem_quantile(flipped, p);
    const CaseLabel flipped_label = case_label(flipped, p, flipped_sol.s_p.value());
    report.checks.push_back(
        {"swap_invariance", same_value(flipped_sol.s_p, sol.s_p),
         fmt::format("{} vs {}", to_string(sol.s_p), to_string(flipped_sol.s_p))});
    report.checks.push_back({"transposition", flipped_label == label.transposed(),
                             fmt::format("{} -> {}", report.cell, flipped_label.id())});
  } catch (const std::exception& e) {
    report.checks.push_back({"transposition", false, e.what()});
    return;
  }

  auto relation_check = [&](const char* name, const BasicMixture<D>& mix) {
    try {
      const auto cls = classify(mix, p);
      std::string failed;
      for (const auto& r : cls.relations_checked) {
        if (!r.holds) failed += (failed.empty() ? "" : "; ") + r.text;
      }
      report.checks.push_back({name, failed.empty(), failed});
      return true;
    } catch (const InternalContradiction& e) {
      report.checks.push_back({"cell_feasible", false, e.what()});
      return false;
    }
  };
  if (relation_check("table_relations", m)) {
    report.checks.push_back({"cell_feasible", true, report.cell});
    relation_check("swapped_table_relations", flipped);
  }
}

}  // namespace

double monte_carlo_quantile(const FloatMixture& m, double p, std::size_t n, std::uint64_t seed) {
  if (n < 1000) throw DomainError("Monte Carlo quantile needs n >= 1000");
  if (!(p > 0 && p < 1)) throw DomainError("p must lie strictly between 0 and 1");
  std::vector<double> draws = sample(m, n, seed);
  auto rank = static_cast<std::size_t>(std::ceil(static_cast<double>(n) * p));
  rank = std::clamp<std::size_t>(rank, 1, n);
  auto nth = draws.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(draws.begin(), nth, draws.end());
  return *nth;
}

double monte_carlo_quantile(const MixtureSpec& m, const Rational& p, std::size_t n,
                            std::uint64_t seed) {
  return monte_carlo_quantile(m.to_float(), to_double(p), n, seed);
}

InstanceGenConfig default_instance_config(std::uint64_t seed) {
  InstanceGenConfig cfg;
  cfg.seed = seed;
  cfg.q_grid = {Rational(1, 5), Rational(1, 4), Rational(1, 3), Rational(2, 5), Rational(1, 2),
                Rational(3, 5), Rational(2, 3), Rational(3, 4), Rational(4, 5)};
  for (int i = 1; i <= 9; ++i) cfg.p_grid.emplace_back(i, 10);
  return cfg;
}

GeneratedInstance generate_instance(const InstanceGenConfig& cfg, std::uint64_t index) {
  if (cfg.q_grid.empty() || cfg.p_grid.empty()) throw DomainError("empty q or p grid");
  Stream rng(splitmix64(cfg.seed ^ splitmix64(index)));

  PiecewiseDistribution x = random_piecewise(rng, cfg, Rational(0));
  PiecewiseDistribution y =
      random_piecewise(rng, cfg, cfg.allow_coincident_breakpoints ? Rational(0) : Rational(1, 2));
  const Rational q = cfg.q_grid[rng.below(cfg.q_grid.size())];
  ExactMixture m{q, x, y};

  const PiecewiseDistribution merged = mixture_distribution(m);
  std::vector<Rational> levels;
  switch (rng.below(4)) {
    case 0:
      break;
    case 3:
      for (const auto& k : merged.knots()) {
        if (k.left < k.right) levels.push_back(k.left);
      }
      break;
    case 1:
      for (const auto& k : merged.knots()) {
        levels.push_back(k.left);
        levels.push_back(k.right);
      }
      break;
    default:
      for (const Rational& a : x.level_knots()) {
        for (const Rational& b : y.level_knots()) levels.push_back(q * a + (1 - q) * b);
      }
      break;
  }
  levels = open_levels(std::move(levels));
  Rational p = levels.empty() ? cfg.p_grid[rng.below(cfg.p_grid.size())]
                              : levels[rng.below(levels.size())];
  return {MixtureSpec(q, std::move(x), std::move(y)), p};
}

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.passed; });
}

std::vector<std::string> CheckReport::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

CheckReport cross_check(const ExactMixture& m, const Rational& p) {
  CheckReport report;
  report.exact = true;
  try {
    const auto sol = theorem_quantile(m, p);
    report.theorem_sp = to_string(sol.s_p);
    const ExactReal direct = direct_quantile(m, p);
    report.direct_sp = to_string(direct);
    report.checks.push_back({"theorem_equals_direct", sol.s_p == direct,
                             report.theorem_sp + " vs " + report.direct_sp});
    add_grid_check(report, m, p, sol.s_p);
    add_structural_checks(report, m, p, sol);
    add_classification_checks(report, m, p, sol);
  } catch (const std::exception& e) {
    report.checks.push_back({"solve", false, e.what()});
  }
  return report;
}

CheckReport cross_check(const FloatMixture& m, double p, bool classifiable) {
  CheckReport report;
  try {
    const auto sol = theorem_quantile(m, p);
    report.theorem_sp = to_string(sol.s_p);
    if (classifiable) {
      const auto direct = direct_quantile(m, p);
      report.direct_sp = to_string(direct);
      const double deviation = std::fabs(sol.s_p.value() - direct.value());
      report.deviation = deviation;
      report.checks.push_back({"theorem_equals_direct", deviation <= Tolerance<double>::kValue,
                               fmt::format("deviation {}", format_double(deviation))});
    }
    add_grid_check(report, m, p, sol.s_p);
    add_structural_checks(report, m, p, sol);
    if (classifiable) add_classification_checks(report, m, p, sol);
  } catch (const std::exception& e) {
    report.checks.push_back({"solve", false, e.what()});
  }
  return report;
}

CheckReport cross_check(const MixtureSpec& m, const Rational& p) {
  if (!(p > 0 && p < 1)) {
    CheckReport report;
    report.exact = m.is_exact();
    report.checks.push_back({"solve", false, "p must lie strictly between 0 and 1"});
    return report;
  }
  if (m.is_exact()) return cross_check(m.exact(), p);
  return cross_check(m.to_float(), to_double(p), m.is_parametric());
}

std::size_t SuiteSummary::failures() const {
  return static_cast<std::size_t>(std::count_if(
      reports.begin(), reports.end(), [](const auto& r) { return !r.second.passed(); }));
}

std::size_t SuiteSummary::impossible_hits() const {
  std::size_t hits = 0;
  for (const auto& [id, n] : census) {
    if (id.rfind("2b", 0) == 0 || id.rfind("4d", 0) == 0) hits += n;
  }
  return hits;
}

SuiteSummary run_suite(const InstanceGenConfig& cfg, std::size_t count, unsigned jobs) {
  std::vector<std::optional<CheckReport>> results(count);
  auto worker = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < count; i += stride) {
      const auto inst = generate_instance(cfg, i);
      results[i] = cross_check(inst.mixture, inst.p);
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker, j, jobs);
  }

  SuiteSummary summary;
  summary.instances = count;
  summary.reports.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!results[i]->cell.empty()) ++summary.census[results[i]->cell];
    summary.reports.emplace_back(i, std::move(*results[i]));
  }
  return summary;
}

}  // namespace mixq
