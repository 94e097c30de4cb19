#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <string>
#include <vector>

#include "sternpoly/conjectures.hpp"
#include "sternpoly/error.hpp"
#include "sternpoly/identities.hpp"
#include "sternpoly/io.hpp"
#include "sternpoly/mining.hpp"
#include "sternpoly/search.hpp"
#include "sternpoly/stern.hpp"
#include "sternpoly/sturm.hpp"

namespace py = pybind11;
using namespace sternpoly;

namespace {

// Python ints cross the boundary as decimal text so indices are unbounded.
BigInt to_big(const py::int_& v) {
  auto text = py::reinterpret_steal<py::str>(PyObject_Str(v.ptr()));
  return BigInt(text.cast<std::string>());
}

py::int_ from_big(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

SternIndex to_index(const py::object& n) {
  if (py::isinstance<py::str>(n)) return parse_index(n.cast<std::string>());
  BigInt v = to_big(n.cast<py::int_>());
  if (sgn(v) < 0) throw Error(ErrorKind::OutOfDomain, "index is negative");
  return v;
}

py::list coeff_list(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(from_big(c));
  return out;
}

IntPoly from_coeffs(const std::vector<py::int_>& coeffs) {
  std::vector<BigInt> c;
  for (const auto& x : coeffs) c.push_back(to_big(x));
  return IntPoly(std::move(c));
}

std::set<FamilyId> families(const std::vector<std::string>& names) {
  std::set<FamilyId> out;
  for (const auto& n : names) out.insert(parse_family(n));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stern polynomials: congruence search, identities and conjecture probes";

  static py::exception<Error> error(m, "SternError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
      PyObject *type, *value, *tb;
      PyErr_Fetch(&type, &value, &tb);
      PyErr_NormalizeException(&type, &value, &tb);
      PyObject_SetAttrString(value, "kind", py::str(std::string(to_string(e.kind()))).ptr());
      PyErr_Restore(type, value, tb);
    }
  });

  m.def("parse_index", [](const std::string& text) { return from_big(parse_index(text)); }, py::arg("text"));
  m.def("stern_poly", [](const py::object& n) { return coeff_list(stern_poly(to_index(n))); }, py::arg("n"),
        "Coefficients of B_n(t), lowest degree first.");
  m.def("stern_pretty", [](const py::object& n) { return stern_poly(to_index(n)).to_pretty(); }, py::arg("n"));
  m.def("stern_number", [](const py::object& n) { return from_big(stern_number(to_index(n))); }, py::arg("n"));
  m.def("stern_degree", [](const py::object& n) { return stern_degree(to_index(n)); }, py::arg("n"));
  m.def("hyperbinary_poly", [](const py::object& n) { return coeff_list(hyperbinary_poly(to_index(n))); },
        py::arg("n"));
  m.def("binary_string", [](const py::object& n) { return binary_string(to_index(n)); }, py::arg("n"));
  m.def("count_real_roots", [](const std::vector<py::int_>& c) { return count_real_roots(from_coeffs(c)); },
        py::arg("coeffs"));

  m.def(
      "is_solution",
      [](const py::object& n, std::uint32_t r, std::uint32_t mod) {
        return is_solution(to_index(n), CongruenceSpec{r, mod});
      },
      py::arg("n"), py::arg("r"), py::arg("m"));
  m.def(
      "enumerate_solutions_json",
      [](std::uint64_t bound, std::uint32_t r, std::uint32_t mod, const std::vector<std::string>& exclude,
         unsigned workers) {
        SearchOptions o;
        o.workers = workers;
        SearchReport rep;
        {
          py::gil_scoped_release release;
          rep = enumerate_solutions(bound, {r, mod}, families(exclude), o);
        }
        return to_json(rep).dump();
      },
      py::arg("bound"), py::arg("r"), py::arg("m"), py::arg("exclude") = std::vector<std::string>{},
      py::arg("workers") = 1u);
  m.def(
      "pi",
      [](std::uint32_t r, std::uint32_t mod, std::uint64_t x, unsigned workers) {
        SearchOptions o;
        o.workers = workers;
        py::gil_scoped_release release;
        return pi({r, mod}, x, o);
      },
      py::arg("r"), py::arg("m"), py::arg("x"), py::arg("workers") = 1u);
  m.def(
      "mine_json",
      [](const std::vector<std::uint64_t>& solutions, std::uint32_t r, std::uint32_t mod, unsigned depth) {
        return to_json(mine_affine_families(solutions, {r, mod}, depth)).dump();
      },
      py::arg("solutions"), py::arg("r"), py::arg("m"), py::arg("depth") = 4u);

  m.def("identity_names", [] {
    std::vector<std::string> out;
    for (const auto& i : identity_catalog()) out.push_back(i.name);
    return out;
  });
  m.def(
      "run_identity_json",
      [](const std::string& name, const std::string& grid, unsigned workers) {
        return to_json(run_identity(name, grid.empty() ? ParamGrid{} : parse_param_grid(grid), workers)).dump();
      },
      py::arg("name"), py::arg("grid") = "", py::arg("workers") = 1u);
  m.def("conjecture_ids", [] {
    std::vector<std::string> out;
    for (const auto& c : conjecture_catalog()) out.push_back(c.id);
    return out;
  });
  m.def(
      "run_conjecture_json",
      [](const std::string& id, const std::string& grid, unsigned workers) {
        return to_json(run_conjecture(id, grid.empty() ? ParamGrid{} : parse_param_grid(grid), workers)).dump();
      },
      py::arg("id"), py::arg("grid") = "", py::arg("workers") = 1u);
  m.def("typo_ledger_json", [] {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : typo_ledger()) a.push_back(to_json(e));
    return a.dump();
  });
}
