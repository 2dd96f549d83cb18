#include "mixq/io.hpp"

#include <fstream>
#include <sstream>

namespace mixq {
namespace {

Rational exact_field(const Json& v, const char* what) {
  if (!v.is_string()) throw ParseError(fmt::format("{} must be a decimal string", what));
  return parse_rational(v.get<std::string>());
}

double float_field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(fmt::format("missing field '{}'", key));
  const Json& v = doc.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return to_double(parse_rational(v.get<std::string>(), true));
  throw ParseError(fmt::format("field '{}' must be a number or decimal string", key));
}

const Json& array_field(const Json& doc, const char* key) {
  static const Json empty = Json::array();
  if (!doc.contains(key)) return empty;
  const Json& v = doc.at(key);
  if (!v.is_array()) throw ParseError(fmt::format("'{}' must be an array", key));
  return v;
}

PiecewiseDistribution parse_piecewise(const Json& doc) {
  std::vector<Atom<Rational>> atoms;
  for (const Json& a : array_field(doc, "atoms")) {
    if (!a.is_array() || a.size() != 2) throw ParseError("atom must be [location, mass]");
    atoms.push_back({exact_field(a[0], "atom location"), exact_field(a[1], "atom mass")});
  }
  std::vector<Segment<Rational>> segments;
  for (const Json& s : array_field(doc, "segments")) {
    if (!s.is_array() || s.size() != 3) throw ParseError("segment must be [left, right, rise]");
    segments.push_back({exact_field(s[0], "segment left"), exact_field(s[1], "segment right"),
                        exact_field(s[2], "segment rise")});
  }
  return PiecewiseDistribution(std::move(atoms), std::move(segments));
}

bool same_distribution(const Distribution& a, const Distribution& b) {
  if (a.is_piecewise() != b.is_piecewise()) return false;
  if (!a.is_piecewise()) {
    const auto& pa = a.parametric();
    const auto& pb = b.parametric();
    return pa.family() == pb.family() && pa.first() == pb.first() && pa.second() == pb.second();
  }
  const auto& pa = a.piecewise();
  const auto& pb = b.piecewise();
  if (pa.atoms().size() != pb.atoms().size() || pa.segments().size() != pb.segments().size()) {
    return false;
  }
  for (std::size_t i = 0; i < pa.atoms().size(); ++i) {
    if (pa.atoms()[i].location != pb.atoms()[i].location ||
        pa.atoms()[i].mass != pb.atoms()[i].mass) {
      return false;
    }
  }
  for (std::size_t i = 0; i < pa.segments().size(); ++i) {
    const auto& sa = pa.segments()[i];
    const auto& sb = pb.segments()[i];
    if (sa.left != sb.left || sa.right != sb.right || sa.rise != sb.rise) return false;
  }
  return true;
}

}  // namespace

Distribution parse_distribution(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) {
    throw ParseError("distribution literal needs a string 'kind'");
  }
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "piecewise") return parse_piecewise(doc);
  if (kind == "uniform") {
    return ParametricDistribution::uniform(float_field(doc, "a"), float_field(doc, "b"));
  }
  if (kind == "normal") {
    return ParametricDistribution::normal(float_field(doc, "mu"), float_field(doc, "sigma"));
  }
  if (kind == "exponential") return ParametricDistribution::exponential(float_field(doc, "lambda"));
  if (kind == "lognormal") {
    return ParametricDistribution::lognormal(float_field(doc, "mu"), float_field(doc, "sigma"));
  }
  throw ParseError("unknown distribution kind '" + kind + "'");
}

Json to_json(const Distribution& d) {
  if (d.is_piecewise()) {
    Json atoms = Json::array();
    for (const auto& a : d.piecewise().atoms()) {
      atoms.push_back({format_rational(a.location), format_rational(a.mass)});
    }
    Json segments = Json::array();
    for (const auto& s : d.piecewise().segments()) {
      segments.push_back({format_rational(s.left), format_rational(s.right), format_rational(s.rise)});
    }
    return Json{{"kind", "piecewise"}, {"atoms", atoms}, {"segments", segments}};
  }
  const auto& p = d.parametric();
  Json out{{"kind", family_name(p.family())}};
  switch (p.family()) {
    case Family::kUniform:
      out["a"] = format_double(p.first());
      out["b"] = format_double(p.second());
      break;
    case Family::kNormal:
    case Family::kLognormal:
      out["mu"] = format_double(p.first());
      out["sigma"] = format_double(p.second());
      break;
    case Family::kExponential:
      out["lambda"] = format_double(p.first());
      break;
  }
  return out;
}

MixtureSpec parse_mixture(const Json& doc) {
  if (!doc.is_object()) throw ParseError("mixture spec must be an object");
  for (const char* key : {"q", "X", "Y"}) {
    if (!doc.contains(key)) throw ParseError(fmt::format("mixture spec is missing '{}'", key));
  }
  Rational q = exact_field(doc.at("q"), "q");
  if (q < 0 || q > 1) throw DomainError("q must lie in [0, 1]");
  return MixtureSpec(std::move(q), parse_distribution(doc.at("X")), parse_distribution(doc.at("Y")));
}

MixtureSpec parse_mixture_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_mixture(doc);
}

MixtureSpec load_mixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mixture_text(buf.str());
}

Json to_json(const MixtureSpec& m) {
  return Json{{"q", format_rational(m.q)}, {"X", to_json(m.x)}, {"Y", to_json(m.y)}};
}

bool same_mixture(const MixtureSpec& a, const MixtureSpec& b) {
  return a.q == b.q && same_distribution(a.x, b.x) && same_distribution(a.y, b.y);
}

std::string subcase_text(Subcase s) {
  switch (s) {
    case Subcase::kNone: return "none";
    case Subcase::kLeftBelowP: return "F_S(sp-)<p";
    case Subcase::kLeftEqualsP: return "F_S(sp-)=p";
  }
  return "none";
}

Json check_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  Json out{{"exact", r.exact},
           {"cell", r.cell},
           {"passed", r.passed()},
           {"theorem_s_p", r.theorem_sp},
           {"direct_s_p", r.direct_sp},
           {"grid_s_p", r.grid_sp}};
  out["deviation"] = r.deviation ? Json(*r.deviation) : Json(nullptr);
  out["checks"] = checks;
  return out;
}

Json suite_json(const SuiteSummary& s) {
  Json census = Json::object();
  for (const auto& [id, n] : s.census) census[id] = n;
  Json failures = Json::array();
  for (const auto& [index, report] : s.reports) {
    if (!report.passed()) {
      failures.push_back(Json{{"index", index}, {"cell", report.cell},
                              {"failed", report.failed_checks()}});
    }
  }
  return Json{{"instances", s.instances},
              {"failures", s.failures()},
              {"impossible_hits", s.impossible_hits()},
              {"census", census},
              {"failed_instances", failures}};
}

std::string suite_line(std::uint64_t index, const CheckReport& r) {
  std::string line = fmt::format("{} {} {}", index, r.cell.empty() ? "-" : r.cell,
                                 r.passed() ? "PASS" : "FAIL");
  for (const auto& name : r.failed_checks()) line += " " + name;
  return line;
}

}  // namespace mixq
