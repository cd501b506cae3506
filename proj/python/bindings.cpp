#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isum/asym.hpp"
#include "isum/catalog.hpp"
#include "isum/errors.hpp"
#include "isum/expr.hpp"
#include "isum/gregquad.hpp"
#include "isum/numerics.hpp"
#include "isum/sigma.hpp"

namespace py = pybind11;
using namespace isum;

namespace {

AdmissibleFunction from_callable(py::function f, int degree, int sign, double onset, bool alternating) {
  RealFn eval = [f](double x) {
    py::gil_scoped_acquire gil;
    return f(x).cast<double>();
  };
  return make_function("python", eval, degree, sign, onset, alternating);
}

}  // namespace

PYBIND11_MODULE(_isum, m) {
  m.doc() = "Principal indefinite sums of admissible functions";

  static py::exception<DomainError> domain_exc(m, "DomainError", PyExc_ValueError);
  static py::exception<RefusedError> refused_exc(m, "RefusedError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      domain_exc(e.what());
    } catch (const RefusedError& e) {
      refused_exc(e.what());
    }
  });

  py::class_<AdmissibleFunction>(m, "Function")
      .def_readonly("name", &AdmissibleFunction::name)
      .def_readonly("convexity_onset", &AdmissibleFunction::convexity_onset)
      .def_readonly("convexity_sign", &AdmissibleFunction::convexity_sign)
      .def_readonly("summable", &AdmissibleFunction::summable)
      .def_property_readonly("degree", &AdmissibleFunction::p)
      .def("__call__", [](const AdmissibleFunction& g, double x) { return g.eval(x); })
      .def("__repr__", [](const AdmissibleFunction& g) { return "<isum.Function " + g.name + ">"; });

  m.def("catalog_function", [](const std::string& name) { return catalog_lookup(name).g; }, py::arg("name"));
  m.def("expression_function", &expression_function, py::arg("text"), py::arg("degree") = -1);
  m.def("callable_function", &from_callable, py::arg("f"), py::arg("degree"), py::arg("sign") = 0,
        py::arg("onset") = 1.0, py::arg("alternating") = false);
  m.def("catalog_names", &catalog_names);
  m.def("oracle", &oracle_eval, py::arg("name"), py::arg("x"));

  py::class_<SigmaResult>(m, "SigmaResult")
      .def_readonly("value", &SigmaResult::value)
      .def_readonly("error_bound", &SigmaResult::error_bound)
      .def_readonly("n_used", &SigmaResult::n_used)
      .def_readonly("p_used", &SigmaResult::p_used)
      .def_property_readonly("bound_kind", [](const SigmaResult& r) { return std::string(to_string(r.bound_kind)); })
      .def_property_readonly("certified", &SigmaResult::certified);

  m.def("sigma", [](const AdmissibleFunction& g, double x, double tol) {
          py::gil_scoped_release nogil;
          return x > 0 ? sigma_eval(g, x, tol) : sigma_extend(g, x, tol);
        },
        py::arg("g"), py::arg("x"), py::arg("tol") = 1e-12);
  m.def("sigma_derivative", [](const AdmissibleFunction& g, int r, double x, double tol) {
          py::gil_scoped_release nogil;
          return sigma_derivative(g, r, x, tol);
        },
        py::arg("g"), py::arg("r"), py::arg("x"), py::arg("tol") = 1e-10);

  py::class_<ConstantEstimate>(m, "ConstantEstimate")
      .def_readonly("value", &ConstantEstimate::value)
      .def_readonly("error_estimate", &ConstantEstimate::error_estimate)
      .def_readonly("iterations", &ConstantEstimate::iterations)
      .def_property_readonly("method", [](const ConstantEstimate& c) { return std::string(to_string(c.method)); });

  m.def("sigma_constant", [](const AdmissibleFunction& g, const std::string& method, double tol) {
          SigmaMethod sm = parse_sigma_method(method);
          py::gil_scoped_release nogil;
          return sigma_constant(g, sm, tol);
        },
        py::arg("g"), py::arg("method") = "raabe", py::arg("tol") = 1e-10);
  m.def("euler_constant", [](const AdmissibleFunction& g, double tol) {
          py::gil_scoped_release nogil;
          return euler_constant(g, tol);
        },
        py::arg("g"), py::arg("tol") = 1e-10);

  py::class_<QuadratureResult>(m, "QuadratureResult")
      .def_readonly("value", &QuadratureResult::value)
      .def_readonly("remainder_bound", &QuadratureResult::remainder_bound)
      .def_readonly("q_used", &QuadratureResult::q_used)
      .def_readonly("corrections", &QuadratureResult::corrections)
      .def_readonly("certified", &QuadratureResult::certified);

  m.def("gregory_sum", [](const AdmissibleFunction& g, std::int64_t a, std::int64_t b, int q) {
          py::gil_scoped_release nogil;
          return gregory_sum(g, a, b, q);
        },
        py::arg("g"), py::arg("m"), py::arg("n"), py::arg("q"));

  m.def("gregory_coeff", &gregory_coeff, py::arg("n"));
  m.def("gregory_tail", &gregory_tail, py::arg("n"));
  m.def("bernoulli_number", &bernoulli_number, py::arg("n"));
}
