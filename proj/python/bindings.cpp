#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smallcover/betti.hpp"
#include "smallcover/charmap.hpp"
#include "smallcover/enumerate.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/hodge.hpp"
#include "smallcover/obstruct.hpp"
#include "smallcover/triangular.hpp"

namespace py = pybind11;
using namespace smallcover;

namespace {

CharMatrix make_matrix(const std::vector<int>& factors, const std::vector<std::string>& rows) {
  return CharMatrix(PolygonProduct(factors), BitMatrix::from_strings(rows));
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) out.push_back(x + 1);
  return out;
}

py::dict hodge_dict(const HodgeAnalysis& a) {
  py::dict out;
  out["T"] = a.T;
  out["t"] = a.t;
  out["hodge"] = a.polynomial.h;
  py::list tables;
  for (const auto& t : a.tables) {
    py::dict chars;
    for (const auto& [rho, mult] : t.entries) chars[py::str(rho.rep.to_string())] = mult;
    tables.append(chars);
  }
  out["multiplicities"] = tables;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Small covers over products of polygons";

  py::register_exception<NotCharacteristic>(m, "NotCharacteristic");
  py::register_exception<NotFactorCompatible>(m, "NotFactorCompatible");
  py::register_exception<ConsistencyError>(m, "ConsistencyError");

  py::class_<CharMatrix>(m, "CharMatrix")
      .def(py::init(&make_matrix), py::arg("factors"), py::arg("rows"))
      .def_property_readonly("factors", [](const CharMatrix& c) { return c.product().side_list(); })
      .def_property_readonly("rows", [](const CharMatrix& c) { return c.matrix().to_strings(); })
      .def_property_readonly("valid", &CharMatrix::valid)
      .def_property_readonly("invalid_vertex", [](const CharMatrix& c) -> py::object {
        if (!c.invalid_vertex()) return py::none();
        return py::cast(one_based(*c.invalid_vertex()));
      })
      .def("__repr__", [](const CharMatrix& c) {
        std::string s = "CharMatrix(";
        for (const auto& r : c.matrix().to_strings()) s += r + " ";
        s.back() = ')';
        return s;
      });

  m.def("genus", &genus, py::arg("m"));
  m.def("rz_poincare", [](const std::vector<int>& f) { return rz_poincare(PolygonProduct(f)); },
        py::arg("factors"));
  m.def("orientable", [](const CharMatrix& c) { return orientable(c).orientable; });
  m.def("factor_compatible", [](const CharMatrix& c) { return certified(factor_compatible(c)); });
  m.def("symplectic_verdict", [](const CharMatrix& c) { return to_string(symplectic_verdict(c).kind); });
  m.def("small_cover_betti", &small_cover_betti);
  m.def("mod2_betti", &mod2_betti);
  m.def("sq1_e2_betti", &sq1_e2_betti);
  m.def("hodge", [](const CharMatrix& c) { return hodge_dict(hodge_analysis(c)); });
  m.def("recover_T", &recover_T_from_poincare, py::arg("betti"), py::arg("n"));
  m.def("blockize", [](const CharMatrix& c) {
    const auto form = blockize(c);
    py::dict out;
    out["factor_order"] = one_based(form.factor_order);
    out["colperm"] = one_based(form.colperm);
    out["rows"] = form.result.matrix().to_strings();
    std::vector<int> genera;
    for (const auto& f : form.tower) genera.push_back(f.genus);
    out["tower_genera"] = genera;
    out["verified"] = verify_blockform(form, c).ok();
    return out;
  });
  m.def(
      "enumerate_charmaps",
      [](const std::vector<int>& f, int jobs) {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : enumerate_charmaps(PolygonProduct(f), jobs)) {
          out.push_back(c.matrix().to_strings());
        }
        return out;
      },
      py::arg("factors"), py::arg("jobs") = 1);
}
