#include "mixq/classifier.hpp"

namespace mixq {

std::string CaseLabel::cell() const {
  std::string out;
  out += static_cast<char>('0' + f_case);
  out += static_cast<char>('a' + g_case - 1);
  return out;
}

std::string CaseLabel::id() const {
  switch (subcase) {
    case Subcase::kNone: return cell();
    case Subcase::kLeftBelowP: return cell() + "/F_S(sp-)<p";
    case Subcase::kLeftEqualsP: return cell() + "/F_S(sp-)=p";
  }
  return cell();
}

bool CaseLabel::has_subcase_branch(int f_case, int g_case) {
  return (f_case == 1 && g_case == 4) || (f_case == 3 && g_case == 4) ||
         (f_case == 4 && g_case == 1) || (f_case == 4 && g_case == 3);
}

bool CaseLabel::impossible(int f_case, int g_case) {
  return (f_case == 2 && g_case == 2) || (f_case == 4 && g_case == 4);
}

std::vector<CaseLabel> all_feasible_labels() {
  std::vector<CaseLabel> labels;
  for (int f = 1; f <= 4; ++f) {
    for (int g = 1; g <= 4; ++g) {
      if (CaseLabel::impossible(f, g)) continue;
      if (CaseLabel::has_subcase_branch(f, g)) {
        labels.push_back({f, g, Subcase::kLeftBelowP});
        labels.push_back({f, g, Subcase::kLeftEqualsP});
      } else {
        labels.push_back({f, g, Subcase::kNone});
      }
    }
  }
  return labels;
}

ClassificationReport<Rational> classify_exact(const MixtureSpec& m, const Rational& p) {
  return classify(m.exact(), p);
}

ClassificationReport<double> classify_float(const MixtureSpec& m, const Rational& p) {
  return classify(m.to_float(), to_double(p));
}

}  // namespace mixq
