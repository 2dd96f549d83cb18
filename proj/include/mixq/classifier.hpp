#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixq/split_solver.hpp"

namespace mixq {

/// Behaviour of a CDF at s_p, numbered as the rows (F) and columns (G) of the
/// mixture case table:
///   1 / a  continuous, strictly increasing just left of s_p
///   2 / b  continuous, constant on some (z, s_p)
///   3 / c  jump at s_p, strictly increasing just left of it
///   4 / d  jump at s_p, constant on some (z, s_p)
enum class Subcase { kNone, kLeftBelowP, kLeftEqualsP };

struct CaseLabel {
  int f_case = 1;  // 1..4
  int g_case = 1;  // 1..4, printed as a..d
  Subcase subcase = Subcase::kNone;

  /// "1a", "3d/F_S(sp-)=p", "4a/F_S(sp-)<p".
  std::string id() const;
  /// Row/column pair without the sub-case, e.g. "2c".
  std::string cell() const;
  bool branches_on_subcase() const { return has_subcase_branch(f_case, g_case); }
  CaseLabel transposed() const { return {g_case, f_case, subcase}; }

  static bool has_subcase_branch(int f_case, int g_case);
  static bool impossible(int f_case, int g_case);

  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

/// The 14 feasible cells in row-major order; branching cells appear once per
/// sub-case (18 labels in all).
std::vector<CaseLabel> all_feasible_labels();

struct Relation {
  std::string text;
  bool holds = false;
};

template <class T>
struct ClassificationReport {
  CaseLabel label;
  Extended<T> s_p;
  std::optional<T> f_flat_witness;
  std::optional<T> g_flat_witness;
  std::vector<Relation> relations_checked;
  QuantileSolution<T> solution;

  bool all_relations_hold() const {
    for (const auto& r : relations_checked) {
      if (!r.holds) return false;
    }
    return true;
  }
};

/// Row (or column) number of one component at s: 1..4.
template <class D>
int component_case(const D& d, const typename D::Scalar& s) {
  const bool continuous = d.is_continuous_at(s);
  const bool flat = d.flat_left_of(s).flat;
  return continuous ? (flat ? 2 : 1) : (flat ? 4 : 3);
}

/// Cell of the case table at s for level p, without rejecting the impossible
/// cells.
template <class D>
CaseLabel case_label(const BasicMixture<D>& m, const typename D::Scalar& p,
                     const typename D::Scalar& s) {
  using T = typename D::Scalar;
  CaseLabel label{component_case(m.x, s), component_case(m.y, s), Subcase::kNone};
  if (label.branches_on_subcase()) {
    const T left = mixture_cdf_left_limit(m, s);
    const bool equal = Tolerance<T>::same_level(left, p);
    if (!equal && left > p) throw InternalContradiction("F_S(s_p-) exceeds p");
    label.subcase = equal ? Subcase::kLeftEqualsP : Subcase::kLeftBelowP;
  }
  return label;
}

/// Evaluates every equality and strict dominance the report's cell asserts,
/// exactly for rationals and within 1e-9 for doubles.
template <class D>
std::vector<Relation> verify_table_relations(const ClassificationReport<typename D::Scalar>& report,
                                             const QuantileSolution<typename D::Scalar>& solution,
                                             const BasicMixture<D>& m,
                                             const typename D::Scalar& p) {
  using T = typename D::Scalar;
  (void)p;
  const Extended<T>& s = solution.s_p;
  const T& s_value = s.value();
  const Extended<T>& fx = solution.x_quantile;
  const Extended<T>& fy = solution.y_quantile;

  auto close = [](const T& a, const T& b) {
    if constexpr (Tolerance<T>::kExact) {
      return a == b;
    } else {
      return Tolerance<T>::same_value(a, b);
    }
  };

  std::vector<Relation> out;
  auto alpha_is_f = [&] {
    out.push_back({"alpha* = F(s_p)", close(solution.alpha_star, m.x.cdf(s_value))});
  };
  auto beta_is_g = [&] {
    out.push_back({"beta* = G(s_p)", close(solution.beta_star, m.y.cdf(s_value))});
  };
  auto both_attain = [&] {
    out.push_back({"s_p = F_X^-1(alpha*)", same_value(s, fx)});
    out.push_back({"s_p = F_Y^-1(beta*)", same_value(s, fy)});
  };
  auto x_dominates = [&] {
    out.push_back({"s_p = F_X^-1(alpha*)", same_value(s, fx)});
    out.push_back({"F_X^-1(alpha*) > F_Y^-1(beta*)", clearly_greater(fx, fy)});
  };
  auto y_dominates = [&] {
    out.push_back({"s_p = F_Y^-1(beta*)", same_value(s, fy)});
    out.push_back({"F_Y^-1(beta*) > F_X^-1(alpha*)", clearly_greater(fy, fx)});
  };
  const bool below = report.label.subcase == Subcase::kLeftBelowP;

  switch (report.label.f_case * 10 + report.label.g_case) {
    case 11: alpha_is_f(); beta_is_g(); both_attain(); break;
    case 12: alpha_is_f(); beta_is_g(); x_dominates(); break;
    case 13: alpha_is_f(); both_attain(); break;
    case 14: alpha_is_f(); below ? both_attain() : x_dominates(); break;
    case 21: alpha_is_f(); beta_is_g(); y_dominates(); break;
    case 23: alpha_is_f(); y_dominates(); break;
    case 24: alpha_is_f(); y_dominates(); break;
    case 31: beta_is_g(); both_attain(); break;
    case 32: beta_is_g(); x_dominates(); break;
    case 33: both_attain(); break;
    case 34: below ? both_attain() : x_dominates(); break;
    case 41: beta_is_g(); below ? both_attain() : y_dominates(); break;
    case 42: beta_is_g(); x_dominates(); break;
    case 43: below ? both_attain() : y_dominates(); break;
    default:
      throw InternalContradiction("no table relations for cell " + report.label.cell());
  }
  return out;
}

/// Solves for s_p through the split formula, labels the cell from the
/// continuity and flatness of each component at s_p, and checks the cell's
/// relations. Throws InternalContradiction for the impossible cells 2b and 4d.
template <class D>
ClassificationReport<typename D::Scalar> classify(const BasicMixture<D>& m,
                                                  const typename D::Scalar& p) {
  using T = typename D::Scalar;
  if (!(m.q > T(0) && m.q < T(1))) throw DomainError("classification needs 0 < q < 1");

  ClassificationReport<T> report{CaseLabel{}, T(0), std::nullopt, std::nullopt, {},
                                 theorem_quantile(m, p)};
  report.s_p = report.solution.s_p;
  const T& s = report.s_p.value();

  report.label = case_label(m, p, s);
  if (CaseLabel::impossible(report.label.f_case, report.label.g_case)) {
    throw InternalContradiction("computed impossible cell " + report.label.cell());
  }
  report.f_flat_witness = m.x.flat_left_of(s).witness;
  report.g_flat_witness = m.y.flat_left_of(s).witness;
  report.relations_checked = verify_table_relations(report, report.solution, m, p);
  return report;
}

/// classify_exact needs two piecewise components; classify_float runs any
/// spec through the double path.
ClassificationReport<Rational> classify_exact(const MixtureSpec& m, const Rational& p);
ClassificationReport<double> classify_float(const MixtureSpec& m, const Rational& p);

}  // namespace mixq
