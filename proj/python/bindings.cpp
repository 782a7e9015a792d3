#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fresnel/evaluator.hpp"
#include "fresnel/kernels.hpp"
#include "fresnel/oracle.hpp"
#include "fresnel/plan_io.hpp"
#include "fresnel/planner.hpp"
#include "fresnel/selftest.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using fresnel::HybridPlan;

PYBIND11_MODULE(_core, m) {
  m.doc() = R"pbdoc(
        Fresnel integrals C(x), S(x) and G(x) = C(x) + iS(x)
        ----------------------------------------------------

        Piecewise approximation: Taylor series on [0, x1], modified
        trapezoid rule on (x1, x2), asymptotic expansion on [x2, inf),
        extended to negative x by oddness.
    )pbdoc";

  py::class_<HybridPlan>(m, "HybridPlan")
      .def_static("from_parameters", &HybridPlan::from_parameters, py::arg("eps"), py::arg("n_taylor"),
                  py::arg("n_trap"), py::arg("n_asym"), py::arg("x1"), py::arg("x2"))
      .def_static(
          "from_json", [](const std::string& text) { return fresnel::parse_plan(text); }, py::arg("text"))
      .def_property_readonly("eps", &HybridPlan::eps)
      .def_property_readonly("n_taylor", &HybridPlan::n_taylor)
      .def_property_readonly("n_trap", &HybridPlan::n_trap)
      .def_property_readonly("n_asym", &HybridPlan::n_asym)
      .def_property_readonly("x1", &HybridPlan::x1)
      .def_property_readonly("x2", &HybridPlan::x2)
      .def_property_readonly("achieved", [](const HybridPlan& p) {
        const auto& a = p.achieved();
        return py::make_tuple(a[0], a[1], a[2]);
      })
      .def("satisfies_bounds", &HybridPlan::satisfies_bounds)
      .def("to_json", [](const HybridPlan& p) { return fresnel::serialize_plan(p); })
      .def("__eq__", [](const HybridPlan& a, const HybridPlan& b) { return a == b; })
      .def("__repr__", [](const HybridPlan& p) {
        return "HybridPlan(eps=" + py::repr(py::float_(p.eps())).cast<std::string>() +
               ", n_taylor=" + std::to_string(p.n_taylor()) + ", n_trap=" + std::to_string(p.n_trap()) +
               ", n_asym=" + std::to_string(p.n_asym()) + ", x1=" + py::repr(py::float_(p.x1())).cast<std::string>() +
               ", x2=" + py::repr(py::float_(p.x2())).cast<std::string>() + ")";
      });

  m.def("default_double_plan", &fresnel::default_double_plan, py::return_value_policy::copy,
        "The double-precision plan (14, 12, 12), x1 = 0.688, x2 = 6.725, eps = 2^-52.");
  m.def(
      "plan", [](double eps) { return fresnel::plan(eps); }, py::arg("eps"),
      "Build a plan whose three branch bounds are all <= eps (2^-75 <= eps <= 1e-2).");
  m.def("min_trap_order", &fresnel::min_trap_order, py::arg("eps"));
  m.def("solve_x1", &fresnel::solve_x1, py::arg("order"), py::arg("eps"));
  m.def("solve_x2", &fresnel::solve_x2, py::arg("order"), py::arg("eps"));

  const HybridPlan& double_plan = fresnel::default_double_plan();

  m.def(
      "fresnel_c", [](const py::array_t<double>& x, const HybridPlan& p) {
        return py::vectorize([&p](double v) { return fresnel::fresnel_c(v, p); })(x);
      },
      py::arg("x"), py::arg("plan") = double_plan, "C(x), elementwise.");
  m.def(
      "fresnel_s", [](const py::array_t<double>& x, const HybridPlan& p) {
        return py::vectorize([&p](double v) { return fresnel::fresnel_s(v, p); })(x);
      },
      py::arg("x"), py::arg("plan") = double_plan, "S(x), elementwise.");
  m.def(
      "fresnel_g",
      [](const py::array_t<double>& x, const HybridPlan& p) {
        return py::vectorize([&p](double v) { return fresnel::fresnel_g(v, p).value.to_std(); })(x);
      },
      py::arg("x"), py::arg("plan") = double_plan, "G(x) = C(x) + iS(x), elementwise.");
  m.def(
      "evaluate",
      [](double x, const HybridPlan& p) {
        const auto r = fresnel::fresnel_g(x, p);
        return py::make_tuple(r.value.to_std(), std::string(fresnel::to_string(r.tag.branch)), r.tag.negated,
                              fresnel::active_bound(std::fabs(x), p));
      },
      py::arg("x"), py::arg("plan") = double_plan,
      "Returns (G(x), branch name, negated, active bound at |x|).");
  m.def(
      "clothoid_sample",
      [](double s0, double s1, int n, const HybridPlan& p) {
        const auto pts = fresnel::clothoid_sample(s0, s1, n, p);
        py::array_t<double> out({static_cast<py::ssize_t>(pts.size()), py::ssize_t{3}});
        auto view = out.mutable_unchecked<2>();
        for (py::ssize_t i = 0; i < static_cast<py::ssize_t>(pts.size()); ++i) {
          view(i, 0) = pts[i].s;
          view(i, 1) = pts[i].c;
          view(i, 2) = pts[i].sv;
        }
        return out;
      },
      py::arg("s0"), py::arg("s1"), py::arg("n"), py::arg("plan") = double_plan,
      "Array of shape (n, 3) with columns s, C(s), S(s).");

  m.def("taylor_bound", &fresnel::kernels::taylor_bound, py::arg("x"), py::arg("order"));
  m.def("trap_bound", &fresnel::kernels::trap_bound, py::arg("order"));
  m.def("asym_bound", &fresnel::kernels::asym_bound, py::arg("x"), py::arg("order"));
  m.def("double_factorial", &fresnel::kernels::double_factorial, py::arg("m"));

  m.def(
      "oracle_g",
      [](double x) {
        const auto g = fresnel::oracle::oracle_g(x);
        return py::make_tuple(fresnel::to_string(g.re, 30), fresnel::to_string(g.im, 30));
      },
      py::arg("x"), "Reference (C, S) as 30-significant-digit decimal strings.");

  m.def(
      "selftest",
      [](int samples, const HybridPlan& p) {
        fresnel::SelfTestOptions options;
        options.samples = samples;
        const auto report = fresnel::run_selftest(p, options);
        py::list suites;
        for (const auto& s : report.suites) {
          py::dict d;
          d["name"] = s.name;
          d["passed"] = s.passed;
          d["max_error"] = s.max_error;
          d["samples"] = s.samples;
          d["violations"] = s.violations;
          d["detail"] = s.detail;
          suites.append(d);
        }
        return py::make_tuple(report.all_passed(), suites);
      },
      py::arg("samples") = 100, py::arg("plan") = double_plan);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
