#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "valleyless/bijections.hpp"
#include "valleyless/counting.hpp"
#include "valleyless/generating_functions.hpp"
#include "valleyless/verify.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const vls::BigInt& v) {
  const std::string s = vls::to_decimal(v);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

std::vector<std::vector<int>> words(const std::vector<vls::Permutation>& perms) {
  std::vector<std::vector<int>> out;
  out.reserve(perms.size());
  for (const auto& p : perms) out.emplace_back(p.word().begin(), p.word().end());
  return out;
}

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact enumeration of valleyless sequences and permutations by valley count";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // Statistics. Sequences and permutations cross the boundary as lists.
  m.def("is_valleyless", [](std::vector<int> s) { return vls::is_valleyless(vls::Sequence(std::move(s))); });
  m.def("count_valleys", [](std::vector<int> s) { return vls::count_valleys(vls::Sequence(std::move(s))); });
  m.def("inversion_table",
        [](std::vector<int> w) { return vec(vls::inversion_table(vls::Permutation(std::move(w))).entries()); });
  m.def("permutation_from_inversion_table", [](std::vector<int> a) {
    return vec(vls::permutation_from_inversion_table(vls::InversionTable(std::move(a))).word());
  });
  m.def("inversion_count", [](std::vector<int> w) { return vls::inversion_count(vls::Permutation(std::move(w))); });
  m.def("descent_set", [](std::vector<int> w) { return vls::descent_set(vls::Permutation(std::move(w))); });
  m.def("valleyless_sequences", [](int n, int max_entry) {
    std::vector<std::vector<int>> out;
    for (const auto& s : vls::valleyless_sequences(n, max_entry)) out.push_back(vec(s.entries()));
    return out;
  });

  // Bijections.
  m.def("theta_encode", [](std::vector<int> parts) { return vls::theta_encode(vls::Composition(std::move(parts))); });
  m.def("theta_decode", [](std::vector<int> cuts, int total) { return vec(vls::theta_decode(cuts, total).parts()); });
  m.def("valleyless_perm_to_composition", [](std::vector<int> w) {
    return vec(vls::valleyless_perm_to_composition(vls::Permutation(std::move(w))).parts());
  });
  m.def("composition_to_valleyless_perm", [](std::vector<int> parts) {
    return vec(vls::composition_to_valleyless_perm(vls::Composition(std::move(parts))).word());
  });
  m.def("generate_valleyless_permutations", [](int n) { return words(vls::generate_valleyless_permutations(n)); });
  m.def("generate_k_valley_permutations",
        [](int n, int k) { return words(vls::generate_k_valley_permutations(n, k)); });

  // Counting.
  m.def("binomial", [](unsigned a, unsigned b) { return to_py(vls::binomial(a, b)); });
  m.def("count_valley_perms", [](int n, int k) { return to_py(vls::count_valley_perms(n, k)); });
  m.def("eulerian", [](int n, int k) { return to_py(vls::eulerian(n, k)); });
  m.def("count_valleyless_nk", [](int n, int k) { return to_py(vls::count_valleyless_nk(n, k)); });
  m.def("count_valleyless_npk", [](int n, int p, int k) { return to_py(vls::count_valleyless_npk(n, p, k)); });

  // Series.
  py::class_<vls::TruncatedSeries>(m, "TruncatedSeries")
      .def_property_readonly("orders",
                             [](const vls::TruncatedSeries& s) {
                               return py::make_tuple(s.orders().x, s.orders().q, s.orders().y);
                             })
      .def("coeff", [](const vls::TruncatedSeries& s, int x, int q, int y) { return to_py(s.coeff({x, q, y})); },
           py::arg("x") = 0, py::arg("q") = 0, py::arg("y") = 0)
      .def("terms",
           [](const vls::TruncatedSeries& s) {
             py::dict d;
             for (const auto& t : s.terms()) d[py::make_tuple(t.exponent.x, t.exponent.q, t.exponent.y)] = to_py(t.coeff);
             return d;
           })
      .def("x_slice", &vls::TruncatedSeries::x_slice)
      .def("to_json", [](const vls::TruncatedSeries& s) { return json_to_py(vls::to_json(s)); })
      .def("__str__", [](const vls::TruncatedSeries& s) { return vls::to_plain(s); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self);

  m.def("gf_valley_perms", &vls::gf_valley_perms, py::arg("k"), py::arg("x_order"));
  m.def("gf_table1_closed_form", &vls::gf_table1_closed_form, py::arg("k"), py::arg("x_order"));
  m.def("gf_valleyless_bivariate", &vls::gf_valleyless_bivariate, py::arg("x_order"), py::arg("y_order"));
  m.def("b_n_recursive", &vls::b_n_recursive, py::arg("n"), py::arg("x_order"), py::arg("q_order"));
  m.def("b_n_closed", &vls::b_n_closed, py::arg("n"), py::arg("x_order"), py::arg("q_order"));
  m.def("v_xqy", [](int x_order, int q_order, int y_order) { return vls::v_xqy({x_order, q_order, y_order}); },
        py::arg("x_order"), py::arg("q_order"), py::arg("y_order"));
  m.def("a_n_recurrence", &vls::a_n_recurrence, py::arg("n"), py::arg("q_order"), py::arg("y_order"));
  m.def("q_inversion_products", &vls::q_inversion_products, py::arg("n"), py::arg("q_order"));

  m.def(
      "verify_all",
      [](int max_n) {
        vls::VerificationReport r;
        {
          py::gil_scoped_release release;
          r = vls::verify_all(max_n < 0 ? vls::VerifyLimits{} : vls::VerifyLimits::capped(max_n));
        }
        return json_to_py(r.to_json());
      },
      py::arg("max_n") = -1);
}
