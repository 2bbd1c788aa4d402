#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homspace/json_io.hpp"

namespace homspace::api {

using json_io::Json;

// Operation names shared by the CLI and the HTTP routes.
const std::vector<std::string>& operations();

// Runs one operation. Throws json_io::RequestError for schema problems and
// GeometryError for domain failures.
Json handle(std::string_view operation, const Json& request);

struct Response {
  int status = 200;
  std::string body;
};

// Wraps handle() in the {ok, result | error} envelope. Status is 200, 400
// for malformed requests, 404 for unknown operations and 422 for domain
// errors.
Response respond(std::string_view operation, const std::string& body);

Json space_info(const Signature& sig);
Json spaces();

}  // namespace homspace::api
