#include "homspace/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "homspace/errors.hpp"

namespace homspace::json_io {

namespace {

void dump_into(const Json& value, std::string& out) {
  switch (value.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_into(item, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const Json& item : value) {
        if (!first) out += ',';
        first = false;
        dump_into(item, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double x = value.get<double>();
      if (!std::isfinite(x)) {
        out += std::isnan(x) ? "\"nan\"" : (x > 0 ? "\"inf\"" : "\"-inf\"");
        break;
      }
      char buffer[32];
      std::snprintf(buffer, sizeof buffer, "%.17g", x == 0.0 ? 0.0 : x);
      out += buffer;
      break;
    }
    default:
      out += value.dump();
  }
}

}  // namespace

std::string dump(const Json& value) {
  std::string out;
  dump_into(value, out);
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw RequestError(std::string("malformed JSON: ") + err.what());
  }
}

const Json& require(const Json& object, const char* key) {
  if (!object.is_object()) throw RequestError("request body must be a JSON object");
  const auto it = object.find(key);
  if (it == object.end()) throw RequestError(std::string("missing field '") + key + "'");
  return *it;
}

double get_number(const Json& object, const char* key) {
  const Json& value = require(object, key);
  if (!value.is_number()) throw RequestError(std::string("field '") + key + "' must be a number");
  return value.get<double>();
}

int get_int(const Json& object, const char* key) {
  const Json& value = require(object, key);
  if (!value.is_number_integer()) throw RequestError(std::string("field '") + key + "' must be an integer");
  return value.get<int>();
}

Signature read_signature(const Json& value) {
  if (value.is_string()) {
    try {
      return resolve_space(value.get<std::string>());
    } catch (const GeometryError& err) {
      throw RequestError(err.what());
    }
  }
  if (value.is_array()) {
    std::vector<int> elements;
    for (const Json& item : value) {
      if (!item.is_number_integer()) throw RequestError("signature entries must be integers");
      elements.push_back(item.get<int>());
    }
    try {
      return Signature::from_ints(elements);
    } catch (const GeometryError& err) {
      throw RequestError(err.what());
    }
  }
  throw RequestError("signature must be a string or an integer array");
}

MVector read_vector(const Json& value) {
  if (!value.is_array() || value.empty()) throw RequestError("vector must be a non-empty number array");
  MVector out(static_cast<Eigen::Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number()) throw RequestError("vector entries must be numbers");
    out(static_cast<Eigen::Index>(i)) = value[i].get<double>();
  }
  return out;
}

std::vector<MVector> read_vectors(const Json& value) {
  const Json& list = value.is_object() ? require(value, "vectors") : value;
  if (!list.is_array()) throw RequestError("expected an array of vectors");
  std::vector<MVector> out;
  for (const Json& item : list) out.push_back(read_vector(item));
  return out;
}

Matrix read_matrix(const Json& value) {
  if (!value.is_array() || value.empty()) throw RequestError("matrix must be a non-empty array of rows");
  const std::size_t size = value.size();
  Matrix out(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  for (std::size_t r = 0; r < size; ++r) {
    const MVector row = read_vector(value[r]);
    if (static_cast<std::size_t>(row.size()) != size) throw RequestError("matrix must be square");
    out.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return out;
}

Motion read_motion(const Json& value, const Signature* fallback) {
  if (!value.is_object()) throw RequestError("motion must be an object with 'rows'");
  Signature sig;
  if (value.contains("sig")) {
    sig = read_signature(value.at("sig"));
  } else if (fallback != nullptr) {
    sig = *fallback;
  } else {
    throw RequestError("missing field 'sig'");
  }
  if (value.contains("rotation")) {
    const Json& rot = value.at("rotation");
    const double phi = get_number(rot, "phi");
    if (rot.contains("axis")) return main_rotation(get_int(rot, "axis"), phi, sig);
    return rotation(get_int(rot, "i"), get_int(rot, "j"), phi, sig);
  }
  Matrix m = read_matrix(require(value, "rows"));
  if (m.rows() != sig.dimension() + 1) throw RequestError("motion size does not match the signature");
  return Motion(std::move(m), sig);
}

Part read_part(const Json& object, const char* key) {
  if (!object.contains(key) || object.at(key).is_null()) return Part::unknown();
  const Json& value = object.at(key);
  if (value.is_number()) return Part::known(value.get<double>());
  if (value == "undetermined") return Part::undetermined();
  throw RequestError(std::string("field '") + key + "' must be a number, null or \"undetermined\"");
}

Json write(const MVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json write(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(write(MVector(m.row(r).transpose())));
  return out;
}

Json write(const Motion& motion) {
  return Json{{"sig", motion.signature().to_string()}, {"rows", write(motion.matrix())}};
}

Json write(const MeasureValue& value) {
  switch (value.kind()) {
    case MeasureValue::Kind::Finite: return value.value();
    case MeasureValue::Kind::Infinite: return "inf";
    case MeasureValue::Kind::Undefined: return "undefined";
    case MeasureValue::Kind::Unmeasurable: return "unmeasurable";
  }
  return nullptr;
}

Json write(const MeasureResult& result) {
  return Json{{"value", write(result.value)},
              {"type", result.type ? Json(result.type->value()) : Json(nullptr)},
              {"complementary", write(result.complementary)},
              {"case", std::string(case_label(result.measure_case))},
              {"ambiguous", result.ambiguous}};
}

Json write(const Connectability& connectability) {
  Json out{{"kind", std::string(to_string(connectability.kind))}};
  if (connectability.distance) out["distance"] = write(*connectability.distance);
  return out;
}

Json write(const Decomposition& decomposition) {
  Json rotations = Json::array();
  for (const PlaneRotation& r : decomposition.rotations) {
    rotations.push_back(Json{{"i", r.i}, {"j", r.j}, {"phi", r.phi}, {"type", r.type.value()}});
  }
  return Json{{"rotations", rotations},
              {"reflection", decomposition.reflection},
              {"sign", decomposition.sign},
              {"proper", decomposition.proper()}};
}

Json write(const Part& part) {
  switch (part.state()) {
    case Part::State::Known: return part.value();
    case Part::State::Unknown: return nullptr;
    case Part::State::Undetermined: return "undetermined";
  }
  return nullptr;
}

Json write(const Triangle& t) {
  return Json{{"a", write(t.a)},         {"b", write(t.b)},
              {"c", write(t.c)},         {"alpha", write(t.alpha)},
              {"beta_prime", write(t.beta_prime)}, {"gamma", write(t.gamma)},
              {"reduced", t.reduced}};
}

Json write(const RightTriangle& t) {
  return Json{{"a", write(t.a)},
              {"b", write(t.b)},
              {"c", write(t.c)},
              {"alpha", write(t.alpha)},
              {"beta_prime", write(t.beta_prime)}};
}

Json write(const AreaMeasure& area) { return Json{{"value", area.value}, {"type", area.type.value()}}; }

Json write(const Orbit& orbit) {
  Json nodes = Json::array();
  for (const MVector& node : orbit.nodes) nodes.push_back(write(node));
  Json edges = Json::array();
  for (const auto& [i, j] : orbit.edges) edges.push_back(Json::array({i, j}));
  return Json{{"nodes", nodes},
              {"edges", edges},
              {"min_distance", orbit.min_distance ? Json(*orbit.min_distance) : Json(nullptr)}};
}

Json write(const CrystalGroup& group) {
  Json generators = Json::array();
  for (std::size_t i = 0; i < group.generators.size(); ++i) {
    Json g = write(group.generators[i]);
    g["name"] = group.generator_names[i];
    generators.push_back(g);
  }
  Json params = Json::object();
  for (const auto& [name, value] : group.params) params[name] = value;
  Json out{{"sig", group.plane_sig.to_string()},
           {"generators", generators},
           {"params", params},
           {"seed", write(group.lattice_seed)}};
  if (group.lattice) {
    out["lattice"] = Json{{"u", group.lattice->u}, {"v", group.lattice->v}, {"r", group.lattice->r}, {"t", group.lattice->t}};
  }
  return out;
}

}  // namespace homspace::json_io
