#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "homspace/catalog.hpp"
#include "homspace/lineals.hpp"
#include "homspace/motions.hpp"
#include "homspace/trigrel.hpp"

namespace homspace::json_io {

using Json = nlohmann::json;

// A payload that does not match the request schema (HTTP 400, CLI exit 1).
class RequestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Compact text with every double written to 17 significant digits.
std::string dump(const Json& value);
// Throws RequestError on malformed text.
Json parse(const std::string& text);

// Field access that raises RequestError instead of json exceptions.
const Json& require(const Json& object, const char* key);
double get_number(const Json& object, const char* key);
int get_int(const Json& object, const char* key);

Signature read_signature(const Json& value);
MVector read_vector(const Json& value);
std::vector<MVector> read_vectors(const Json& value);
Matrix read_matrix(const Json& value);
// {"sig": ..., "rows": [[...]]}; a missing "sig" falls back to `fallback`.
Motion read_motion(const Json& value, const Signature* fallback = nullptr);
Part read_part(const Json& object, const char* key);

Json write(const MVector& v);
Json write(const Matrix& m);
Json write(const Motion& motion);
Json write(const MeasureValue& value);
Json write(const MeasureResult& result);
Json write(const Connectability& connectability);
Json write(const Decomposition& decomposition);
Json write(const Part& part);
Json write(const Triangle& triangle);
Json write(const RightTriangle& triangle);
Json write(const AreaMeasure& area);
Json write(const Orbit& orbit);
Json write(const CrystalGroup& group);

}  // namespace homspace::json_io
