// mixq: quantiles of two-component mixtures from spec files.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mixq/mixq.hpp"

namespace {

using namespace mixq;

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kParse = 2,
  kDomain = 3,
  kContradiction = 4,
  kUnwritable = 5,
};

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string spec;
  std::string p;
  std::string from;
  std::string to;
  std::size_t steps = 0;
  std::string out;
  long long count = -1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;

  bool machine() const { return format == "machine"; }
};

template <class T>
std::string attains_text(const QuantileSolution<T>& s) {
  if (s.x_attains && s.y_attains) return "both";
  return s.x_attains ? "X" : "Y";
}

template <class T>
void print_solution(const QuantileSolution<T>& s, const Options& opt) {
  if (opt.machine()) {
    std::cout << solution_json(s).dump() << "\n";
    return;
  }
  std::cout << fmt::format("s_p            {}\n", to_string(s.s_p))
            << fmt::format("alpha*         {}\n", format_number(s.alpha_star))
            << fmt::format("beta*          {}\n", format_number(s.beta_star))
            << fmt::format("F_X^-1(alpha*) {}\n", to_string(s.x_quantile))
            << fmt::format("F_Y^-1(beta*)  {}\n", to_string(s.y_quantile))
            << fmt::format("attained by    {}\n", attains_text(s))
            << fmt::format("clamped        {}\n", s.clamped ? "yes" : "no")
            << fmt::format("arithmetic     {}\n", Tolerance<T>::kExact ? "exact" : "double");
}

int run_quantile(const Options& opt) {
  const MixtureSpec m = load_mixture(opt.spec);
  const Rational p = parse_rational(opt.p);
  if (m.is_exact()) {
    print_solution(theorem_quantile(m.exact(), p), opt);
  } else {
    print_solution(theorem_quantile(m.to_float(), to_double(p)), opt);
  }
  return kOk;
}

template <class T>
int print_report(const ClassificationReport<T>& r, const Options& opt) {
  if (opt.machine()) {
    std::cout << report_json(r).dump() << "\n";
  } else {
    auto witness = [](const std::optional<T>& w) { return w ? format_number(*w) : std::string("-"); };
    std::cout << fmt::format("cell       {}\n", r.label.cell())
              << fmt::format("subcase    {}\n", subcase_text(r.label.subcase))
              << fmt::format("s_p        {}\n", to_string(r.s_p))
              << fmt::format("alpha*     {}\n", format_number(r.solution.alpha_star))
              << fmt::format("beta*      {}\n", format_number(r.solution.beta_star))
              << fmt::format("F witness  {}\n", witness(r.f_flat_witness))
              << fmt::format("G witness  {}\n", witness(r.g_flat_witness));
    for (const auto& rel : r.relations_checked) {
      std::cout << fmt::format("{}  {}\n", rel.holds ? "PASS" : "FAIL", rel.text);
    }
  }
  return r.all_relations_hold() ? kOk : kCheckFailed;
}

int run_classify(const Options& opt) {
  const MixtureSpec m = load_mixture(opt.spec);
  const Rational p = parse_rational(opt.p);
  if (m.is_exact()) return print_report(classify_exact(m, p), opt);
  return print_report(classify_float(m, p), opt);
}

std::string cell(const Rational& v) { return format_double(to_double(v)); }
std::string cell(double v) { return format_double(v); }
template <class T>
std::string cell(const Extended<T>& v) {
  return v.is_finite() ? cell(v.value()) : to_string(v);
}

template <class D>
std::string curve_table(const BasicMixture<D>& m, const typename D::Scalar& from,
                        const typename D::Scalar& to, std::size_t steps) {
  using T = typename D::Scalar;
  std::ostringstream out;
  out << "x,F,G,F_S\n";
  for (std::size_t i = 0; i < steps; ++i) {
    const T x = from + (to - from) * T(static_cast<long>(i)) / T(static_cast<long>(steps - 1));
    out << cell(x) << ',' << cell(m.x.cdf(x)) << ',' << cell(m.y.cdf(x)) << ','
        << cell(mixture_cdf(m, x)) << '\n';
  }
  out << "\np,F_X^-1,F_Y^-1,F_S^-1\n";
  for (std::size_t i = 0; i < steps; ++i) {
    const T p = T(static_cast<long>(i + 1)) / T(static_cast<long>(steps + 1));
    out << cell(p) << ',' << cell(m.x.quantile(p)) << ',' << cell(m.y.quantile(p)) << ','
        << cell(theorem_quantile(m, p).s_p) << '\n';
  }
  return out.str();
}

int run_curve(const Options& opt) {
  const MixtureSpec m = load_mixture(opt.spec);
  const Rational from = parse_rational(opt.from, true);
  const Rational to = parse_rational(opt.to, true);
  if (!(from < to)) throw DomainError("--from must be below --to");
  if (opt.steps < 2) throw DomainError("--steps must be at least 2");

  const std::string table = m.is_exact()
                                ? curve_table(m.exact(), from, to, opt.steps)
                                : curve_table(m.to_float(), to_double(from), to_double(to), opt.steps);
  std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open " + opt.out + " for writing");
  file << table;
  file.close();
  if (!file) throw OutputError("failed writing " + opt.out);

  if (opt.machine()) {
    std::cout << Json{{"out", opt.out}, {"rows", opt.steps}}.dump() << "\n";
  } else {
    std::cout << fmt::format("wrote {} x rows and {} p rows to {}\n", opt.steps, opt.steps, opt.out);
  }
  return kOk;
}

int run_verify(const Options& opt) {
  if (opt.count < 1) throw DomainError("--count must be at least 1");
  if (opt.jobs < 1) throw DomainError("--jobs must be at least 1");
  const SuiteSummary s =
      run_suite(default_instance_config(opt.seed), static_cast<std::size_t>(opt.count), opt.jobs);
  if (opt.machine()) {
    std::cout << suite_json(s).dump() << "\n";
  } else {
    for (const auto& [index, report] : s.reports) std::cout << suite_line(index, report) << "\n";
    for (const auto& [id, n] : s.census) std::cout << fmt::format("census {} {}\n", id, n);
    std::cout << fmt::format("summary instances={} failures={} impossible_hits={}\n", s.instances,
                             s.failures(), s.impossible_hits());
  }
  return s.failures() == 0 && s.impossible_hits() == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantiles of two-component mixtures"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  auto* quantile = app.add_subcommand("quantile", "Mixture quantile via the split formula");
  auto* classify = app.add_subcommand("classify", "Case-table cell and its relations");
  for (auto* cmd : {quantile, classify}) {
    cmd->add_option("--spec", opt.spec, "Mixture spec file")->required();
    cmd->add_option("--p", opt.p, "Level in (0, 1) as a decimal string")->required();
  }

  auto* curve = app.add_subcommand("curve", "Write CDF and quantile tables");
  curve->add_option("--spec", opt.spec, "Mixture spec file")->required();
  curve->add_option("--from", opt.from, "Left end of the x grid")->required();
  curve->add_option("--to", opt.to, "Right end of the x grid")->required();
  curve->add_option("--steps", opt.steps, "Grid points")->required();
  curve->add_option("--out", opt.out, "Output file")->required();

  auto* verify = app.add_subcommand("verify", "Cross-check generated instances");
  verify->add_option("--count", opt.count, "Number of instances")->required();
  verify->add_option("--seed", opt.seed, "Generator seed")->required();
  verify->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*quantile) return run_quantile(opt);
    if (*classify) return run_classify(opt);
    if (*curve) return run_curve(opt);
    return run_verify(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const InternalContradiction& e) {
    std::cerr << "internal contradiction: " << e.what() << "\n";
    return kContradiction;
  } catch (const OutputError& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return kUnwritable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kContradiction;
  }
}
