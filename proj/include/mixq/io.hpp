#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mixq/verification.hpp"

namespace mixq {

using Json = nlohmann::ordered_json;

// Distribution literals:
//   {"kind": "piecewise", "atoms": [["0", "0.5"]], "segments": [["1", "2", "0.5"]]}
//   {"kind": "uniform", "a": "0", "b": "1"}
//   {"kind": "normal", "mu": "0", "sigma": "1"}
//   {"kind": "exponential", "lambda": "2"}
//   {"kind": "lognormal", "mu": "0", "sigma": "0.5"}
// Piecewise numbers must be decimal (or "num/den") strings and are read
// exactly; exponent notation is rejected there. Parametric fields also accept
// JSON numbers and exponents.
Distribution parse_distribution(const Json& doc);
Json to_json(const Distribution& d);

/// {"q": "0.5", "X": <distribution>, "Y": <distribution>}
MixtureSpec parse_mixture(const Json& doc);
MixtureSpec parse_mixture_text(const std::string& text);
MixtureSpec load_mixture(const std::filesystem::path& path);
Json to_json(const MixtureSpec& m);

/// Exactly equal masses, breakpoints and q (parametric fields compared as
/// doubles).
bool same_mixture(const MixtureSpec& a, const MixtureSpec& b);

template <class T>
Json extended_json(const Extended<T>& x) {
  return to_string(x);
}

template <class T>
Json solution_json(const QuantileSolution<T>& s) {
  return Json{{"s_p", extended_json(s.s_p)},
              {"alpha_star", format_number(s.alpha_star)},
              {"beta_star", format_number(s.beta_star)},
              {"x_quantile", extended_json(s.x_quantile)},
              {"y_quantile", extended_json(s.y_quantile)},
              {"x_attains", s.x_attains},
              {"y_attains", s.y_attains},
              {"clamped", s.clamped},
              {"exact", Tolerance<T>::kExact}};
}

std::string subcase_text(Subcase s);

template <class T>
Json report_json(const ClassificationReport<T>& r) {
  auto witness = [](const std::optional<T>& w) {
    return w ? Json(format_number(*w)) : Json(nullptr);
  };
  Json relations = Json::array();
  for (const auto& rel : r.relations_checked) {
    relations.push_back(Json{{"relation", rel.text}, {"holds", rel.holds}});
  }
  return Json{{"cell", r.label.id()},
              {"f_case", r.label.f_case},
              {"g_case", std::string(1, static_cast<char>('a' + r.label.g_case - 1))},
              {"subcase", subcase_text(r.label.subcase)},
              {"s_p", extended_json(r.s_p)},
              {"f_flat_witness", witness(r.f_flat_witness)},
              {"g_flat_witness", witness(r.g_flat_witness)},
              {"relations", relations},
              {"all_hold", r.all_relations_hold()},
              {"solution", solution_json(r.solution)}};
}

Json check_json(const CheckReport& r);
Json suite_json(const SuiteSummary& s);

/// One line per instance: "<index> <cell> PASS" or "<index> <cell> FAIL <checks>".
std::string suite_line(std::uint64_t index, const CheckReport& r);

}  // namespace mixq
