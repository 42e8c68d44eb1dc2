#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hahnroot/expr.hpp"
#include "hahnroot/report.hpp"

namespace py = pybind11;
using namespace hahnroot;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hahn series roots of polynomials over F_p(t); reports are JSON strings.";
  m.attr("SCHEMA") = kSchemaVersion;

  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const ParseError& err) {
      PyErr_SetString(PyExc_ValueError, err.what());
    }
  });

  m.def("normalize", [](const std::string& poly, std::uint32_t p) { return format_polynomial(parse_polynomial(poly, p)); },
        py::arg("poly"), py::arg("p"), "Canonical printed form of a polynomial.");
  m.def("roots_json", [](const std::string& poly, std::uint32_t p, unsigned depth) {
    const Poly f = parse_polynomial(poly, p);
    py::gil_scoped_release release;
    return roots_report(f, depth).dump();
  }, py::arg("poly"), py::arg("p"), py::arg("depth") = 10);
  m.def("addpol_json", [](const std::string& poly, std::uint32_t p) {
    const Poly f = parse_polynomial(poly, p);
    py::gil_scoped_release release;
    return addpol_report(f).dump();
  }, py::arg("poly"), py::arg("p"));
  m.def("intersections_json", [](const std::string& poly, std::uint32_t p) {
    const Poly f = parse_polynomial(poly, p);
    py::gil_scoped_release release;
    return intersections_report(f).dump();
  }, py::arg("poly"), py::arg("p"));
  m.def("bounds_json", [](const std::string& poly, std::uint32_t p, const std::string& mode) {
    const Poly f = parse_polynomial(poly, p);
    const MaxExpMode md = parse_mode(mode);
    py::gil_scoped_release release;
    return bounds_report(f, md).dump();
  }, py::arg("poly"), py::arg("p"), py::arg("mode") = "sharp");
  m.def("order_bound_json", [](const std::string& poly, std::uint32_t p) {
    return order_bound_report(parse_polynomial(poly, p)).dump();
  }, py::arg("poly"), py::arg("p"));
}
