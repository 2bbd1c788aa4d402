// Python extension. Geometry values cross as numpy arrays; structured
// results reuse the service JSON schemas and arrive as plain dicts.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "homspace/api.hpp"
#include "homspace/catalog.hpp"
#include "homspace/errors.hpp"
#include "homspace/lineals.hpp"
#include "homspace/trigrel.hpp"

namespace py = pybind11;
using namespace homspace;

namespace {

py::object to_python(const json_io::Json& value) {
  if (value.is_null()) return py::none();
  if (value.is_boolean()) return py::bool_(value.get<bool>());
  if (value.is_number_integer()) return py::int_(value.get<long long>());
  if (value.is_number()) return py::float_(value.get<double>());
  if (value.is_string()) return py::str(value.get<std::string>());
  if (value.is_array()) {
    py::list out;
    for (const auto& item : value) out.append(to_python(item));
    return out;
  }
  py::dict out;
  for (const auto& [key, item] : value.items()) out[py::str(key)] = to_python(item);
  return out;
}

json_io::Json from_python(const py::handle& value) {
  if (value.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(value)) return value.cast<bool>();
  if (py::isinstance<py::int_>(value)) return value.cast<long long>();
  if (py::isinstance<py::float_>(value)) return value.cast<double>();
  if (py::isinstance<py::str>(value)) return value.cast<std::string>();
  if (py::isinstance<py::dict>(value)) {
    json_io::Json out = json_io::Json::object();
    for (const auto& [key, item] : value.cast<py::dict>()) out[py::str(key).cast<std::string>()] = from_python(item);
    return out;
  }
  if (py::hasattr(value, "tolist")) return from_python(value.attr("tolist")());
  if (py::isinstance<py::sequence>(value)) {
    json_io::Json out = json_io::Json::array();
    for (const auto& item : value.cast<py::sequence>()) out.push_back(from_python(item));
    return out;
  }
  throw py::type_error("value is not JSON-compatible");
}

// Accepts a Signature, a signature string or registry name, or a list of ints.
Signature as_signature(const py::handle& value) {
  if (py::isinstance<Signature>(value)) return value.cast<Signature>();
  if (py::isinstance<py::str>(value)) return resolve_space(value.cast<std::string>());
  return Signature::from_ints(value.cast<std::vector<int>>());
}

TypeValue as_type(int value) { return TypeValue::from_int(value); }

Lineal as_lineal(const std::vector<MVector>& vectors, const Signature& sig) { return Lineal::span(vectors, sig); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Geometry of homogeneous spaces with rotation-type signatures";

  static py::exception<GeometryError> geometry_error(m, "GeometryError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr pending) {
    try {
      if (pending) std::rethrow_exception(pending);
    } catch (const GeometryError& err) {
      const py::tuple args = py::make_tuple(std::string(error_code_name(err.code())), err.what());
      PyErr_SetObject(geometry_error.ptr(), args.ptr());
    } catch (const json_io::RequestError& err) {
      PyErr_SetString(PyExc_ValueError, err.what());
    }
  });

  py::class_<Signature>(m, "Signature")
      .def(py::init([](const py::object& value) { return as_signature(value); }), py::arg("value"))
      .def_property_readonly("dimension", &Signature::dimension)
      .def("element", [](const Signature& s, int m_) { return s.element(m_).value(); })
      .def("cumulative", [](const Signature& s, int m_) { return s.cumulative(m_).value(); })
      .def("pair", [](const Signature& s, int i, int j) -> py::object {
        const ExtendedType t = s.pair(i, j);
        if (t.is_infinite()) return py::str("inf");
        return py::int_(t.finite().value());
      })
      .def("to_list", &Signature::to_ints)
      .def("reversed", &Signature::reversed)
      .def("__str__", &Signature::to_string)
      .def("__repr__", [](const Signature& s) { return "Signature('" + s.to_string() + "')"; })
      .def("__eq__", [](const Signature& lhs, const Signature& rhs) { return lhs == rhs; });
  py::implicitly_convertible<py::str, Signature>();
  py::implicitly_convertible<py::list, Signature>();

  m.def("gtrig", [](double phi, int k) {
        const TrigValues t = gtrig(phi, as_type(k));
        return py::make_tuple(t.cos, t.sin, t.tan);
      },
      py::arg("phi"), py::arg("k"), "Generalized (cos, sin, tan) of the given rotation type.");

  m.def("meta_product", &meta_product, py::arg("x"), py::arg("y"), py::arg("sig"));
  m.def("product_i", [](const MVector& x, const MVector& y, int i, const Signature& sig) { return product_i(x, y, i, sig); },
        py::arg("x"), py::arg("y"), py::arg("i"), py::arg("sig"));
  m.def("vector_index", [](const MVector& x, const Signature& sig) -> std::optional<int> {
        const VectorIndex idx = vector_index(x, sig);
        if (idx.is_limit()) return std::nullopt;
        return idx.value();
      },
      py::arg("x"), py::arg("sig"), "Least index of x, or None for a limit vector.");
  m.def("normalize", [](const MVector& x, const Signature& sig) { return normalize(x, sig); }, py::arg("x"),
        py::arg("sig"));
  m.def("canonical_point", [](const MVector& x) { return canonical_point(x); }, py::arg("x"));

  m.def("main_rotation", [](int axis, double phi, const Signature& sig) { return main_rotation(axis, phi, sig).matrix(); },
        py::arg("axis"), py::arg("phi"), py::arg("sig"));
  m.def("rotation", [](int i, int j, double phi, const Signature& sig) { return rotation(i, j, phi, sig).matrix(); },
        py::arg("i"), py::arg("j"), py::arg("phi"), py::arg("sig"));
  m.def("is_motion", [](const Matrix& matrix, const Signature& sig) { return is_gm_orthogonal(matrix, sig).ok; },
        py::arg("matrix"), py::arg("sig"));
  m.def("inverse", [](const Matrix& matrix, const Signature& sig) { return inverse(Motion(matrix, sig)).matrix(); },
        py::arg("matrix"), py::arg("sig"));
  m.def("decompose", [](const Matrix& matrix, const Signature& sig) {
        return to_python(json_io::write(decompose(Motion(matrix, sig))));
      },
      py::arg("matrix"), py::arg("sig"));
  m.def("dual_transform", [](const Matrix& matrix, const Signature& sig) {
        const Motion dual = dual_transform(Motion(matrix, sig));
        return py::make_tuple(dual.matrix(), dual.signature());
      },
      py::arg("matrix"), py::arg("sig"), "Returns the dual matrix and the reversed signature.");

  m.def("measure_between", [](const std::vector<MVector>& a, const std::vector<MVector>& b, const Signature& sig) {
        return to_python(json_io::write(measure_between(as_lineal(a, sig), as_lineal(b, sig))));
      },
      py::arg("a"), py::arg("b"), py::arg("sig"), "Measure between the spans of two vector lists.");
  m.def("lineal_signature", [](const std::vector<MVector>& vectors, const Signature& sig) {
        return lineal_signature(as_lineal(vectors, sig));
      },
      py::arg("vectors"), py::arg("sig"));
  m.def("connectable", [](const MVector& x, const MVector& y, const Signature& sig) {
        return to_python(json_io::write(connectable(x, y, sig)));
      },
      py::arg("x"), py::arg("y"), py::arg("sig"));

  m.def("solve_triangle", [](double b, double c, double alpha, const Signature& plane) {
        return to_python(json_io::write(solve_triangle_sas(b, c, alpha, plane)));
      },
      py::arg("b"), py::arg("c"), py::arg("alpha"), py::arg("plane"), "Triangle from two edges and the included angle.");
  m.def("right_triangle_area", [](double a, double b, const Signature& plane) {
        const AreaMeasure area = right_triangle_area(a, b, plane);
        return py::make_tuple(area.value, area.type.value());
      },
      py::arg("a"), py::arg("b"), py::arg("plane"));

  m.def("tiling_orbit", [](int p, int q, int depth, bool dual) {
        const CrystalGroup group = dual ? dual_tiling_group(p, q) : tiling_group(p, q);
        return to_python(json_io::write(orbit(group, depth)));
      },
      py::arg("p"), py::arg("q"), py::arg("depth") = 2, py::arg("dual") = false);

  m.def("request", [](const std::string& operation, const py::dict& body) {
        return to_python(api::handle(operation, from_python(body)));
      },
      py::arg("operation"), py::arg("body"), "Runs a service operation on a request dict.");
  m.def("operations", &api::operations);
  m.def("set_tolerance", &set_default_tolerance, py::arg("tol"));
  m.def("tolerance", &default_tolerance);
}
