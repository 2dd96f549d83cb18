#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixq/mixq.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace mixq;

namespace {

Rational level(const std::string& p) { return parse_rational(p, true); }

std::string quantile_json(const MixtureSpec& m, const std::string& p) {
  if (m.is_exact()) return solution_json(theorem_quantile(m.exact(), level(p))).dump();
  return solution_json(theorem_quantile(m.to_float(), to_double(level(p)))).dump();
}

std::string classify_json(const MixtureSpec& m, const std::string& p) {
  if (m.is_exact()) return report_json(classify_exact(m, level(p))).dump();
  return report_json(classify_float(m, level(p))).dump();
}

std::string direct(const MixtureSpec& m, const std::string& p) {
  if (m.is_exact()) return to_string(direct_quantile_exact(m, level(p)));
  return to_string(direct_quantile_float(m, level(p)));
}

std::string cdf(const MixtureSpec& m, const std::string& x) {
  if (m.is_exact()) return format_rational(mixture_cdf(m.exact(), level(x)));
  return format_double(mixture_cdf(m.to_float(), to_double(level(x))));
}

}  // namespace

PYBIND11_MODULE(_mixq, mod) {
  mod.doc() = "Quantiles of two-component mixtures";

  static py::exception<ParseError> parse_error(mod, "ParseError", PyExc_ValueError);
  static py::exception<DomainError> domain_error(mod, "DomainError", PyExc_ValueError);
  static py::exception<InternalContradiction> contradiction(mod, "InternalContradiction",
                                                            PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const ParseError& err) {
      parse_error(err.what());
    } catch (const DomainError& err) {
      domain_error(err.what());
    } catch (const InternalContradiction& err) {
      contradiction(err.what());
    }
  });

  py::class_<MixtureSpec>(mod, "Mixture")
      .def(py::init([](const std::string& text) { return parse_mixture_text(text); }), "spec"_a,
           "Mixture(spec_json: str)")
      .def_static("load", [](const std::string& path) { return load_mixture(path); }, "path"_a)
      .def_property_readonly("q", [](const MixtureSpec& m) { return format_rational(m.q); })
      .def_property_readonly("is_exact", &MixtureSpec::is_exact)
      .def("to_json", [](const MixtureSpec& m) { return to_json(m).dump(); })
      .def("swapped", &MixtureSpec::swapped)
      .def("__eq__", [](const MixtureSpec& a, const MixtureSpec& b) { return same_mixture(a, b); })
      .def("__repr__", [](const MixtureSpec& m) { return "Mixture(" + to_json(m).dump() + ")"; });

  mod.def("quantile_json", &quantile_json, "mixture"_a, "p"_a);
  mod.def("classify_json", &classify_json, "mixture"_a, "p"_a);
  mod.def("direct_quantile", &direct, "mixture"_a, "p"_a);
  mod.def("cdf", &cdf, "mixture"_a, "x"_a);
  mod.def("cross_check_json",
          [](const MixtureSpec& m, const std::string& p) { return check_json(cross_check(m, level(p))).dump(); },
          "mixture"_a, "p"_a);
  mod.def("sample",
          [](const MixtureSpec& m, std::size_t n, std::uint64_t seed) { return sample(m, n, seed); },
          "mixture"_a, "n"_a, "seed"_a);
  mod.def("monte_carlo_quantile",
          [](const MixtureSpec& m, const std::string& p, std::size_t n, std::uint64_t seed) {
            return monte_carlo_quantile(m, level(p), n, seed);
          },
          "mixture"_a, "p"_a, "n"_a, "seed"_a);
  mod.def("generate_instance",
          [](std::uint64_t seed, std::uint64_t index) {
            auto inst = generate_instance(default_instance_config(seed), index);
            return py::make_tuple(inst.mixture, format_rational(inst.p));
          },
          "seed"_a, "index"_a);
  mod.def("verify_json",
          [](std::size_t count, std::uint64_t seed, unsigned jobs) {
            if (count == 0) throw DomainError("count must be at least 1");
            py::gil_scoped_release release;
            return suite_json(run_suite(default_instance_config(seed), count, jobs)).dump();
          },
          "count"_a, "seed"_a, "jobs"_a = 1);
}
