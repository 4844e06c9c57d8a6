#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dismal/divisors.hpp"
#include "dismal/expression.hpp"
#include "dismal/genfunc.hpp"
#include "dismal/primes.hpp"
#include "dismal/sequences.hpp"
#include "dismal/squares.hpp"
#include "dismal/structures.hpp"

namespace py = pybind11;
using namespace dismal;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10))); }

py::list to_py(const std::vector<BigInt>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_dismal, m) {
  m.doc() = "Dismal (max-min, carry-free) arithmetic";

  auto error = py::register_exception<Error>(m, "DismalError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());

  py::class_<Number>(m, "Number")
      .def(py::init([](const std::string& digits, int base) { return parse_digits(digits, Base{base}); }),
           py::arg("digits"), py::arg("base") = 10)
      .def_static("from_value", [](std::uint64_t v, int base) { return Number::from_value(v, Base{base}); },
                  py::arg("value"), py::arg("base") = 10)
      .def_property_readonly("base", [](const Number& n) { return n.base().radix(); })
      .def_property_readonly("digits", [](const Number& n) { return n.digit_string(); })
      .def("__len__", &Number::length)
      .def("__int__", &Number::value)
      .def("value", &Number::value)
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Number& n) { return std::hash<Number>{}(n); })
      .def("__str__", &Number::to_string)
      .def("__repr__", [](const Number& n) { return "Number('" + n.to_string() + "')"; });

  m.def("parse", [](const std::string& s, int base) { return parse(s, Base{base}); }, py::arg("text"),
        py::arg("base") = 10);
  m.def("evaluate", [](const std::string& e, std::optional<int> base) {
    return evaluate(e, base ? std::optional<Base>(Base{*base}) : std::nullopt);
  }, py::arg("expr"), py::arg("base") = py::none());
  m.def("dominates", &dominates);
  m.def("reverse", &reverse);

  m.def("divides", &divides);
  m.def("divisors", [](const Number& n) { return divisor_list(n).divisors; });
  m.def("divisor_count", &divisor_count);
  m.def("divisor_sum", &divisor_sum);

  m.def("is_prime", &is_prime);
  m.def("is_pseudoprime", &is_pseudoprime);
  m.def("prime_count", [](int base, std::size_t k) { return prime_count(Base{base}, k).count; });
  m.def("primes_of_length", [](int base, std::size_t k) { return primes_of_length(Base{base}, k); });
  m.def("reduced_templates", [](std::size_t max_k) {
    std::vector<std::string> out;
    for (const auto& t : reduced_templates(max_k)) out.push_back(t.digits.digit_string());
    return out;
  });

  m.def("d_ones", [](int base, int k) { return to_py(d_ones(Base{base}, k)); });
  m.def("first_dominant_count", [](int k, int t) { return to_py(first_dominant_count(k, t)); });
  m.def("d2_ones_series", [](std::size_t n) { return to_py(d2_ones_series(n).coefficients); });
  m.def("d2_minus3_series", [](std::size_t n) { return to_py(d2_minus3_series(n).coefficients); });
  m.def("d_series", [](int l, std::size_t n) { return to_py(d_series(l, n).coefficients); });
  m.def("m_series", [](int l, std::size_t n) { return to_py(m_series(l, n).coefficients); });

  m.def("phi", [](const Number& n) { return phi(n); });
  m.def("partition_count", [](const Number& n) { return to_py(partition_count(n)); });
  m.def("setcover_count", [](int w) { return to_py(setcover_count(w)); });
  m.def("meet", &meet);

  m.def("square", &square);
  m.def("square_count", [](int base, std::size_t length) { return square_census(Base{base}, length).distinct; });
  m.def("allones_sqrt_count", &allones_sqrt_count);

  m.def("sequence", [](const std::string& id, int base, std::uint64_t start, std::uint64_t end) {
    std::vector<std::pair<std::uint64_t, std::string>> out;
    for (const auto& t : sequence_terms(parse_sequence_id(id), Base{base}, start, end)) out.emplace_back(t.index, t.value);
    return out;
  }, py::arg("id"), py::arg("base") = 10, py::arg("start") = 1, py::arg("end") = 20);
}
