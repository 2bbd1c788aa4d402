#include "homspace/api.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "homspace/errors.hpp"

namespace homspace::api {

using json_io::get_int;
using json_io::get_number;
using json_io::read_signature;
using json_io::RequestError;
using json_io::require;
using json_io::write;

namespace {

Signature request_signature(const Json& request) { return read_signature(require(request, "sig")); }

Json measure(const Json& request) {
  const Signature sig = request_signature(request);
  const Lineal a = Lineal::span(json_io::read_vectors(require(request, "a")), sig);
  const Lineal b = Lineal::span(json_io::read_vectors(require(request, "b")), sig);
  if (a.is_empty() || b.is_empty()) fail(ErrorCode::AllVectorsDegenerate, "a lineal has no basis vectors");
  return write(measure_between(a, b));
}

Json decompose_op(const Json& request) {
  const Motion motion = json_io::read_motion(request);
  const Decomposition d = decompose(motion);
  Json out = write(d);
  out["recompose_error"] = (d.recompose(motion.signature()) - motion.matrix()).lpNorm<Eigen::Infinity>();
  return out;
}

Json triangle(const Json& request) {
  const Signature sig = request_signature(request);
  const std::string kind = request.value("kind", std::string("sas"));
  if (kind == "sas") {
    const Triangle t = solve_triangle_sas(get_number(request, "b"), get_number(request, "c"),
                                          get_number(request, "alpha"), sig);
    Json out = write(t);
    if (t.gamma.is_known()) out["residual"] = triangle_residual(t, sig);
    return out;
  }
  if (kind == "right") {
    RightTriangle known;
    known.a = json_io::read_part(request, "a");
    known.b = json_io::read_part(request, "b");
    known.c = json_io::read_part(request, "c");
    known.alpha = json_io::read_part(request, "alpha");
    known.beta_prime = json_io::read_part(request, "beta_prime");
    const RightTriangle solved = solve_right_triangle(known, sig);
    Json out = write(solved);
    out["residual"] = right_triangle_residual(solved, sig);
    return out;
  }
  throw RequestError("triangle kind must be \"sas\" or \"right\"");
}

Json area(const Json& request) {
  const Signature sig = request_signature(request);
  const double a = get_number(request, "a");
  const double b = get_number(request, "b");
  Json out = write(right_triangle_area(a, b, sig));
  if (request.contains("oracle_steps")) {
    out["oracle"] = area_integral_oracle(a, b, sig, get_int(request, "oracle_steps"));
  }
  return out;
}

Json connectable_op(const Json& request) {
  const Signature sig = request_signature(request);
  return write(connectable(json_io::read_vector(require(request, "x")),
                           json_io::read_vector(require(request, "y")), sig));
}

Json apply(const Json& request) {
  const Signature sig = request_signature(request);
  Motion motion = json_io::read_motion(require(request, "motion"), &sig);
  if (!(motion.signature() == sig)) fail(ErrorCode::SignatureMismatch, "motion and points use different signatures");
  if (request.contains("p")) motion = parameterize(motion, get_number(request, "p"));
  const std::vector<MVector> points = json_io::read_vectors(require(request, "points"));
  std::vector<MVector> images;
  for (const MVector& x : points) {
    check_size(x, sig);
    images.push_back(motion.apply(x));
  }
  Json before = Json::array();
  Json after = Json::array();
  double change = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Json row_before = Json::array();
    Json row_after = Json::array();
    for (std::size_t j = 0; j < points.size(); ++j) {
      const double pb = meta_product(points[i], points[j], sig);
      const double pa = meta_product(images[i], images[j], sig);
      row_before.push_back(pb);
      row_after.push_back(pa);
      change = std::max(change, std::abs(pa - pb));
    }
    before.push_back(row_before);
    after.push_back(row_after);
  }
  Json out_points = Json::array();
  for (const MVector& y : images) out_points.push_back(write(y));
  return Json{{"points", out_points},
              {"motion", write(motion)},
              {"meta_products", Json{{"before", before}, {"after", after}}},
              {"max_product_change", change}};
}

CrystalGroup tiling_group_from(const Json& request) {
  if (request.contains("group")) {
    const std::string name = require(request, "group").get<std::string>();
    if (name == "galilean" || name == "minkowski") {
      LinearPlaneParams params;
      params.a = request.value("a", 1.0);
      params.b = request.value("b", 1.0);
      params.u = request.value("u", 2);
      params.plus = request.value("plus", true);
      return linear_plane_group(name == "galilean" ? LinearPlane::Galilean : LinearPlane::Minkowski, params);
    }
    if (name == "curved-galilean") return curved_galilean_group(request.value("u", 2), request.value("plus", true));
    if (name == "curved-minkowski") return curved_minkowski_group(get_int(request, "p"), get_int(request, "q"));
    throw RequestError("unknown group '" + name + "'");
  }
  const Json& pq = require(request, "pq");
  if (!pq.is_array() || pq.size() != 2 || !pq[0].is_number_integer() || !pq[1].is_number_integer()) {
    throw RequestError("'pq' must be two integers");
  }
  const int p = pq[0].get<int>();
  const int q = pq[1].get<int>();
  const double step = request.value("step", 1.0);
  return request.value("dual", false) ? dual_tiling_group(p, q, step) : tiling_group(p, q, step);
}

Json tiling(const Json& request) {
  const CrystalGroup group = tiling_group_from(request);
  const int depth = request.contains("depth") ? get_int(request, "depth") : 2;
  const double tol = request.value("tol", 1e-7);
  Json out = write(orbit(group, depth, tol));
  out["sig"] = group.plane_sig.to_string();
  out["group"] = write(group);
  return out;
}

Json dual(const Json& request) {
  return write(dual_transform(json_io::read_motion(require(request, "motion"))));
}

Json space(const Json& request) { return space_info(request_signature(request)); }

Json health(const Json&) { return Json{{"status", "ok"}}; }

Json spaces_op(const Json&) { return spaces(); }

using Handler = std::function<Json(const Json&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"apply", apply},       {"area", area},         {"connectable", connectable_op},
      {"decompose", decompose_op}, {"dual", dual},     {"health", health},
      {"measure", measure},   {"space", space},       {"spaces", spaces_op},
      {"tiling", tiling},     {"triangle", triangle},
  };
  return table;
}

Json envelope_error(std::string_view code, const std::string& message) {
  return Json{{"ok", false}, {"error", Json{{"code", std::string(code)}, {"message", message}}}};
}

}  // namespace

const std::vector<std::string>& operations() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Json handle(std::string_view operation, const Json& request) {
  const auto it = handlers().find(operation);
  if (it == handlers().end()) throw RequestError("unknown operation '" + std::string(operation) + "'");
  try {
    return it->second(request);
  } catch (const Json::exception& err) {
    throw RequestError(std::string("bad field type: ") + err.what());
  }
}

Response respond(std::string_view operation, const std::string& body) {
  if (handlers().find(operation) == handlers().end()) {
    return {404, json_io::dump(envelope_error("NotFound", "unknown operation '" + std::string(operation) + "'"))};
  }
  try {
    const Json request = body.empty() ? Json::object() : json_io::parse(body);
    return {200, json_io::dump(Json{{"ok", true}, {"result", handle(operation, request)}})};
  } catch (const RequestError& err) {
    return {400, json_io::dump(envelope_error("BadRequest", err.what()))};
  } catch (const GeometryError& err) {
    return {422, json_io::dump(envelope_error(error_code_name(err.code()), err.what()))};
  }
}

Json space_info(const Signature& sig) {
  const int n = sig.dimension();
  Json pairs = Json::array();
  for (int i = 0; i <= n; ++i) {
    Json row = Json::array();
    for (int j = 0; j <= n; ++j) {
      const ExtendedType k = sig.pair(i, j);
      row.push_back(k.is_infinite() ? Json("inf") : Json(k.finite().value()));
    }
    pairs.push_back(row);
  }
  Json cumulative = Json::array();
  for (int m = 0; m <= n; ++m) cumulative.push_back(sig.cumulative(m).value());
  Json relations = Json::array();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      relations.push_back(Json{{"i", i}, {"j", j}, {"relation", std::string(to_string(axis_relation(i, j, sig)))}});
    }
  }
  const VolumeType volume = volume_type(sig);
  Json out{{"sig", sig.to_string()},
           {"dimension", n},
           {"cumulative", cumulative},
           {"pair_types", pairs},
           {"axis_relations", relations},
           {"dof", n * (n + 1) / 2},
           {"metaspace", metaspace_signature(sig).to_string()},
           {"tangent", tangent_signature(sig).to_string()},
           {"volume", Json{{"parabolic", volume.parabolic}, {"conjectured_type", volume.conjectured.value()}}}};
  if (n >= 1) out["separability"] = std::string(to_string(separability_class(sig)));
  if (n == 2) {
    const InequalityProfile profile = triangle_inequality_profile(sig);
    out["triangle_inequalities"] = Json{{"a_vs_b_minus_c", std::string(to_string(profile.shortest_edge))},
                                        {"b_vs_a_plus_c", std::string(to_string(profile.longest_edge))},
                                        {"alpha_vs_beta_prime_minus_gamma", std::string(to_string(profile.internal_angle))},
                                        {"beta_prime_vs_alpha_plus_gamma", std::string(to_string(profile.external_angle))}};
  }
  return out;
}

Json spaces() {
  Json out = Json::array();
  for (const NamedSpace& space : named_spaces()) {
    out.push_back(Json{{"name", space.name}, {"sig", space.sig.to_string()}, {"notes", space.notes}});
  }
  return out;
}

}  // namespace homspace::api
