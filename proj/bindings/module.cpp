#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ncreal/errors.hpp"
#include "ncreal/parse.hpp"
#include "ncreal/polymatrix.hpp"
#include "ncreal/realrad.hpp"
#include "ncreal/serialize.hpp"

namespace py = pybind11;
using namespace ncreal;

namespace {

FeasConfig make_cfg(unsigned seed, double tol, int max_iter, long long den_cap) {
  FeasConfig cfg;
  cfg.random_seed = seed;
  cfg.numeric_tolerance = tol;
  cfg.max_iterations = max_iter;
  cfg.rounding_denominator_cap = BigInt(den_cap);
  return cfg;
}

std::string ternary_name(Ternary t) {
  return t == Ternary::yes ? "yes" : t == Ternary::no ? "no" : "unknown";
}

}  // namespace

PYBIND11_MODULE(_ncreal, m) {
  m.doc() = "real radicals of left ideals in the free *-algebra over Q";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UndecidedError>(m, "UndecidedError", PyExc_RuntimeError);
  py::register_exception<RealRadicalUndecided>(m, "RealRadicalUndecidedError",
                                               PyExc_RuntimeError);

  py::class_<NcPoly>(m, "Poly")
      .def(py::init([](const std::string& text) { return parse_poly(text); }),
           py::arg("text"))
      .def("__str__", [](const NcPoly& p) { return print_poly(p); })
      .def("__repr__",
           [](const NcPoly& p) { return "Poly('" + print_poly(p) + "')"; })
      .def("__eq__", [](const NcPoly& a, const NcPoly& b) { return a == b; })
      .def("__hash__",
           [](const NcPoly& p) { return py::hash(py::str(print_poly(p))); })
      .def("__add__", [](const NcPoly& a, const NcPoly& b) { return a + b; })
      .def("__sub__", [](const NcPoly& a, const NcPoly& b) { return a - b; })
      .def("__mul__", [](const NcPoly& a, const NcPoly& b) { return a * b; })
      .def("adjoint", &NcPoly::adjoint)
      .def("degree", &NcPoly::degree)
      .def("is_zero", &NcPoly::is_zero);

  m.def("parse_poly", &parse_poly, py::arg("text"));
  m.def("print_poly", &print_poly, py::arg("poly"));

  m.def(
      "member",
      [](const NcPoly& q, const std::vector<NcPoly>& gens, int g) {
        return member(normalize_ideal(gens, g), q);
      },
      py::arg("q"), py::arg("gens"), py::arg("g") = -1,
      "exact left-ideal membership");

  m.def(
      "real_radical",
      [](const std::vector<NcPoly>& gens, int g, unsigned seed, double tol,
         int max_iter, long long den_cap) {
        const RealRadicalResult res =
            real_radical(gens, g, make_cfg(seed, tol, max_iter, den_cap));
        py::dict out;
        out["g"] = res.ideal.g;
        out["degree_bound"] = res.ideal.d;
        out["unit"] = res.ideal.unit_flag;
        out["generators"] = ideal_generators(res.ideal);
        out["trace_json"] = to_json(res.trace).dump();
        return out;
      },
      py::arg("gens"), py::arg("g") = -1, py::arg("seed") = 1,
      py::arg("tol") = 1e-9, py::arg("max_iter") = 10000,
      py::arg("den_cap") = 1000000,
      "smallest real left ideal containing the generators");

  m.def(
      "is_real",
      [](const std::vector<NcPoly>& gens, int g, unsigned seed, double tol,
         int max_iter, long long den_cap) {
        return is_real(gens, g, make_cfg(seed, tol, max_iter, den_cap));
      },
      py::arg("gens"), py::arg("g") = -1, py::arg("seed") = 1,
      py::arg("tol") = 1e-9, py::arg("max_iter") = 10000,
      py::arg("den_cap") = 1000000);

  m.def(
      "alpha_member",
      [](const NcPoly& a, const std::vector<NcPoly>& gens, int degree_cap,
         int g, unsigned seed, double tol, int max_iter, long long den_cap) {
        return ternary_name(alpha_member(
            a, gens, degree_cap, g, make_cfg(seed, tol, max_iter, den_cap)));
      },
      py::arg("a"), py::arg("gens"), py::arg("degree_cap"), py::arg("g") = -1,
      py::arg("seed") = 1, py::arg("tol") = 1e-9, py::arg("max_iter") = 10000,
      py::arg("den_cap") = 1000000,
      "membership in the alpha radical; returns 'yes', 'no' or 'unknown'");

  m.def(
      "smith_normal_form",
      [](const std::string& matrix) {
        const SmithForm f = smith_normal_form(parse_unipoly_matrix(matrix));
        py::dict out;
        out["u"] = print_unipoly_matrix(f.U);
        out["d"] = print_unipoly_matrix(f.D);
        out["v"] = print_unipoly_matrix(f.V);
        std::vector<std::string> diag;
        for (const UniPoly& p : f.diag) diag.push_back(print_unipoly(p));
        out["diagonal"] = diag;
        return out;
      },
      py::arg("matrix"), "Smith normal form of a matrix over Q[x]");

  m.def(
      "eradical",
      [](const std::vector<std::string>& gens, int degree_cap) {
        std::vector<UniPolyMatrix> ms;
        for (const std::string& s : gens) ms.push_back(parse_unipoly_matrix(s));
        return print_unipoly_matrix(eradical_matpoly(ms, degree_cap));
      },
      py::arg("gens"), py::arg("degree_cap") = 12,
      "generator of the real radical of a left ideal in M_n(Q[x])");

  m.def(
      "eradical_member",
      [](const std::string& q, const std::vector<std::string>& gens,
         int degree_cap) {
        std::vector<UniPolyMatrix> ms;
        for (const std::string& s : gens) ms.push_back(parse_unipoly_matrix(s));
        return eradical_member(parse_unipoly_matrix(q), ms, degree_cap);
      },
      py::arg("q"), py::arg("gens"), py::arg("degree_cap") = 12);
}
