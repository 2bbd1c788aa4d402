// Command-line front end. Requests use the same JSON schemas as the HTTP
// service and are read from stdin; flags fill in the common fields.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homspace/api.hpp"
#include "homspace/errors.hpp"
#include "homspace/server.hpp"

namespace {

using homspace::api::Json;
using homspace::json_io::RequestError;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct Options {
  bool json = false;
  std::string sig;
  double tol = 0.0;
  int port = 7321;
  int depth = 2;
  std::vector<int> pq;
  bool svg = false;
  bool dual = false;
  std::string space_sig;
};

Json read_stdin_request() {
  const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return Json::object();
  Json request = homspace::json_io::parse(text);
  // A bare array is taken as the matrix rows of a motion.
  if (request.is_array()) request = Json{{"rows", request}};
  if (!request.is_object()) throw RequestError("request must be a JSON object");
  return request;
}

void print_space_info(const Json& info) {
  std::cout << "signature      " << info["sig"].get<std::string>() << '\n';
  std::cout << "dimension      " << info["dimension"] << '\n';
  std::cout << "motion DOF     " << info["dof"] << '\n';
  std::cout << "metaspace      " << info["metaspace"].get<std::string>() << '\n';
  std::cout << "tangent        " << info["tangent"].get<std::string>() << '\n';
  if (info.contains("separability")) {
    std::cout << "separability   " << info["separability"].get<std::string>() << '\n';
  }
  std::cout << "volume type    " << (info["volume"]["parabolic"].get<bool>() ? "parabolic" : "non-parabolic")
            << " (conjectured " << info["volume"]["conjectured_type"] << ")\n";
  std::cout << "K_ij table\n";
  for (const Json& row : info["pair_types"]) {
    std::cout << "  ";
    for (const Json& entry : row) {
      std::ostringstream cell;
      if (entry.is_string()) {
        cell << entry.get<std::string>();
      } else {
        cell << entry.get<int>();
      }
      std::cout << std::string(5 - std::min<std::size_t>(4, cell.str().size()), ' ') << cell.str();
    }
    std::cout << '\n';
  }
  if (!info["axis_relations"].empty()) {
    std::cout << "axis relations\n";
    for (const Json& rel : info["axis_relations"]) {
      std::cout << "  " << rel["i"] << ", " << rel["j"] << ": " << rel["relation"].get<std::string>() << '\n';
    }
  }
}

std::string tiling_svg(const Json& orbit) {
  struct Point {
    double x;
    double y;
    bool visible;
  };
  std::vector<Point> points;
  double extent = 1.0;
  for (const Json& node : orbit["nodes"]) {
    const double x0 = node[0].get<double>();
    if (std::abs(x0) <= 1e-9) {
      points.push_back({0.0, 0.0, false});
      continue;
    }
    const Point p{node[1].get<double>() / x0, node[2].get<double>() / x0, true};
    extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    points.push_back(p);
  }
  constexpr double size = 800.0;
  const double scale = size / (2.2 * extent);
  auto sx = [&](double x) { return size / 2.0 + x * scale; };
  auto sy = [&](double y) { return size / 2.0 - y * scale; };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const Json& edge : orbit["edges"]) {
    const Point& a = points[edge[0].get<std::size_t>()];
    const Point& b = points[edge[1].get<std::size_t>()];
    if (!a.visible || !b.visible) continue;
    svg << "<line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\"" << sy(b.y)
        << "\" stroke=\"#7a8aa0\" stroke-width=\"1\"/>\n";
  }
  for (const Point& p : points) {
    if (!p.visible) continue;
    svg << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"3\" fill=\"#1f3b70\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

int run_operation(const std::string& op, Json request, const Options& opts) {
  if (!opts.sig.empty()) request["sig"] = opts.sig;
  const Json result = homspace::api::handle(op, request);
  if (op == "tiling" && opts.svg) {
    std::cout << tiling_svg(result);
  } else if (op == "space" && !opts.json) {
    print_space_info(result);
  } else if (opts.json) {
    std::cout << homspace::json_io::dump(result) << '\n';
  } else {
    std::cout << result.dump(2) << '\n';
  }
  return 0;
}

void report(const Options& opts, std::string_view code, const std::string& message) {
  if (opts.json) {
    std::cerr << homspace::json_io::dump(
                     Json{{"ok", false}, {"error", Json{{"code", std::string(code)}, {"message", message}}}})
              << '\n';
  } else {
    std::cerr << "error [" << code << "]: " << message << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous space geometry toolkit"};
  app.require_subcommand(1);
  Options opts;
  app.add_flag("--json", opts.json, "Machine-readable JSON output");
  app.add_option("--tol", opts.tol, "Structural tolerance (overrides HOMSPACE_TOL)");

  auto* space = app.add_subcommand("space", "Signature properties");
  auto* info = space->add_subcommand("info", "Dimension, K table, axis relations and more");
  space->require_subcommand(1);
  info->add_option("sig", opts.space_sig, "Signature or space name")->required();

  std::vector<std::pair<CLI::App*, std::string>> stdin_ops;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"measure", "Measure between two lineals {a, b}"},
           {"decompose", "Decompose a motion {rows} into plane rotations"},
           {"triangle", "Solve a triangle {kind, ...}"},
           {"area", "Right triangle area {a, b}"},
           {"connectable", "Connectability of two points {x, y}"},
           {"apply", "Apply a motion to points {motion, points}"},
           {"dual", "Dual transform of a motion {motion}"}}) {
    auto* sub = app.add_subcommand(name, help + ", read from stdin");
    sub->add_option("--sig", opts.sig, "Signature or space name");
    stdin_ops.emplace_back(sub, name);
  }

  auto* tiling = app.add_subcommand("tiling", "Orbit of a tiling group as JSON or SVG");
  tiling->add_option("--pq", opts.pq, "Tiling parameters p q")->expected(2);
  tiling->add_option("--depth", opts.depth, "Number of seed-moving letters")->check(CLI::NonNegativeNumber);
  tiling->add_flag("--svg", opts.svg, "Render SVG in the central-projection chart");
  tiling->add_flag("--dual", opts.dual, "Use the dual group");

  auto* serve = app.add_subcommand("serve", "Start the HTTP service");
  serve->add_option("--port", opts.port, "Listening port")->check(CLI::Range(1, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : kExitUsage;
  }

  if (const char* env = std::getenv("HOMSPACE_TOL"); env != nullptr && opts.tol == 0.0) {
    try {
      opts.tol = std::stod(env);
    } catch (const std::exception&) {
      report(opts, "Usage", std::string("HOMSPACE_TOL is not a number: ") + env);
      return kExitUsage;
    }
  }
  if (opts.tol != 0.0) {
    if (!(opts.tol > 0.0)) {
      report(opts, "Usage", "tolerance must be positive");
      return kExitUsage;
    }
    homspace::set_default_tolerance(opts.tol);
  }

  try {
    if (*serve) {
      homspace::HttpService service;
      std::cerr << "listening on 0.0.0.0:" << opts.port << '\n';
      if (!service.listen("0.0.0.0", opts.port)) {
        report(opts, "Usage", "cannot bind port " + std::to_string(opts.port));
        return kExitUsage;
      }
      return 0;
    }
    if (*info) return run_operation("space", Json{{"sig", opts.space_sig}}, opts);
    if (*tiling) {
      Json request = read_stdin_request();
      if (!opts.pq.empty()) request["pq"] = opts.pq;
      if (!request.contains("pq") && !request.contains("group")) throw RequestError("tiling needs --pq P Q");
      request["depth"] = opts.depth;
      if (opts.dual) request["dual"] = true;
      return run_operation("tiling", request, opts);
    }
    for (const auto& [sub, name] : stdin_ops) {
      if (*sub) return run_operation(name, read_stdin_request(), opts);
    }
  } catch (const RequestError& err) {
    report(opts, "BadRequest", err.what());
    return kExitUsage;
  } catch (const homspace::GeometryError& err) {
    report(opts, homspace::error_code_name(err.code()), err.what());
    return kExitDomain;
  }
  return kExitUsage;
}
