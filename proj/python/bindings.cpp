#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewrec/render.hpp"
#include "skewrec/spec_file.hpp"

namespace py = pybind11;
using namespace skewrec;

namespace {

QuaternionAlgebra quaternions(const std::string& a, const std::string& b) {
  return {parse_rational(a), parse_rational(b)};
}

OctonionAlgebra octonions(const std::string& a, const std::string& b, const std::string& g) {
  return {quaternions(a, b), parse_rational(g)};
}

struct PyClosedForm {
  ClosedForm cf;

  std::string text() const { return render_closed_form(cf); }
  std::string eval(unsigned long long k) const { return render_element(eval_closed_form(cf, k)); }
  std::string kind() const {
    if (std::holds_alternative<FieldClosedForm>(cf)) return "field";
    if (std::holds_alternative<QuatClosedForm>(cf)) return "quaternion";
    return "octonion";
  }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact closed forms for left linear recurrences";

  static py::exception<Error> error(m, "SkewrecError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      py::object inst = exc(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<RecurrenceSpec>(m, "Recurrence")
      .def(py::init([](const std::string& text) { return parse_spec_file(text); }), py::arg("text"))
      .def_property_readonly("order", &RecurrenceSpec::order)
      .def_readwrite("height", &RecurrenceSpec::height)
      .def("canonical", &render_spec_file)
      .def("oracle", [](const RecurrenceSpec& s, unsigned long long k) { return render_element(iterate_oracle(s, k)); },
           py::arg("k"))
      .def("solve", [](const RecurrenceSpec& s) { return PyClosedForm{solve(s)}; })
      .def("__eq__", [](const RecurrenceSpec& x, const RecurrenceSpec& y) { return x == y; })
      .def("__repr__", &render_spec_file);

  py::class_<PyClosedForm>(m, "ClosedForm")
      .def_property_readonly("kind", &PyClosedForm::kind)
      .def("eval", &PyClosedForm::eval, py::arg("k"))
      .def("verify",
           [](const PyClosedForm& cf, const RecurrenceSpec& s, unsigned long long kmax) {
             auto r = verify_closed_form(s, cf.cf, kmax);
             return py::make_tuple(r.ok, r.first_failure ? py::cast(*r.first_failure) : py::none());
           },
           py::arg("spec"), py::arg("kmax"))
      .def("__str__", &PyClosedForm::text);

  m.def(
      "quat_mul",
      [](const std::string& a, const std::string& b, const std::string& x, const std::string& y) {
        auto alg = quaternions(a, b);
        return alg.render(alg.mul(alg.parse(x), alg.parse(y)));
      },
      py::arg("a"), py::arg("b"), py::arg("x"), py::arg("y"));
  m.def(
      "quat_norm",
      [](const std::string& a, const std::string& b, const std::string& x) {
        auto alg = quaternions(a, b);
        return render_rational(alg.norm(alg.parse(x)));
      },
      py::arg("a"), py::arg("b"), py::arg("x"));
  m.def(
      "quat_inverse",
      [](const std::string& a, const std::string& b, const std::string& x) {
        auto alg = quaternions(a, b);
        return alg.render(alg.inv(alg.parse(x)));
      },
      py::arg("a"), py::arg("b"), py::arg("x"));
  m.def(
      "oct_mul",
      [](const std::string& a, const std::string& b, const std::string& g, const std::string& x,
         const std::string& y) {
        auto alg = octonions(a, b, g);
        return alg.render(alg.mul(alg.parse(x), alg.parse(y)));
      },
      py::arg("a"), py::arg("b"), py::arg("gamma"), py::arg("x"), py::arg("y"));
  m.def(
      "oct_norm",
      [](const std::string& a, const std::string& b, const std::string& g, const std::string& x) {
        auto alg = octonions(a, b, g);
        return render_rational(alg.norm(alg.parse(x)));
      },
      py::arg("a"), py::arg("b"), py::arg("gamma"), py::arg("x"));
}
