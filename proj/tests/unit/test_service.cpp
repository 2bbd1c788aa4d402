#include <doctest.h>

#include <cmath>
#include <thread>

#include "homspace/api.hpp"
#include "homspace/errors.hpp"
#include "homspace/server.hpp"

// After Eigen: <resolv.h> defines a `_res` macro that clashes with Eigen internals.
#include <httplib.h>

using namespace homspace;
using api::Json;

namespace {

Json ok_result(const api::Response& response) {
  const Json body = Json::parse(response.body);
  REQUIRE(body["ok"].get<bool>());
  return body["result"];
}

}  // namespace

TEST_CASE("dump writes 17 significant digits and is stable") {
  const Json value{{"b", 0.1}, {"a", std::nan("")}, {"c", -0.0}, {"d", 1.0 / 3.0}};
  const std::string text = json_io::dump(value);
  CHECK(text == R"({"a":"nan","b":0.10000000000000001,"c":0,"d":0.33333333333333331})");
  CHECK(json_io::dump(json_io::parse(text)) == text);
}

TEST_CASE("request readers reject malformed payloads") {
  CHECK_THROWS_AS(json_io::parse("{"), json_io::RequestError);
  CHECK_THROWS_AS(json_io::read_signature(Json(3)), json_io::RequestError);
  CHECK_THROWS_AS(json_io::read_signature(Json("{2}")), json_io::RequestError);
  CHECK(json_io::read_signature(Json::array({0, -1})) == Signature::from_ints({0, -1}));
  CHECK_THROWS_AS(json_io::read_vector(Json::array({1, "x"})), json_io::RequestError);
  CHECK_THROWS_AS(json_io::read_matrix(Json::array({Json::array({1, 0}), Json::array({0})})), json_io::RequestError);
  CHECK(json_io::read_part(Json{{"a", nullptr}}, "a").state() == Part::State::Unknown);
  CHECK(json_io::read_part(Json{{"a", "undetermined"}}, "a").state() == Part::State::Undetermined);
  CHECK(json_io::read_part(Json{{"a", 2.0}}, "a").value() == 2.0);
}

TEST_CASE("operations through the envelope") {
  const Json space = ok_result(api::respond("space", R"({"sig":"{0,1}"})"));
  CHECK(space["dof"] == 3);
  CHECK(space["metaspace"] == "{0,0,1}");

  const Json measure = ok_result(api::respond("measure", R"({"sig":"{1,1}","a":[[1,0,0],[0,1,0]],"b":[[1,0,0],[0,1,0]]})"));
  CHECK(measure["case"] == "(a)");
  CHECK(measure["ambiguous"] == true);
  CHECK(measure["type"].is_null());

  const Json unconnected = ok_result(api::respond("connectable", R"({"sig":"{0,-1}","x":[1,0,0],"y":[1,0,1]})"));
  CHECK(unconnected["kind"] == "unconnectable");

  const Json applied = ok_result(api::respond(
      "apply", R"({"sig":"{1,1}","motion":{"rotation":{"axis":1,"phi":0.5}},"points":[[1,0,0],[0.6,0.8,0]]})"));
  CHECK(applied["points"][0][0].get<double>() == doctest::Approx(std::cos(0.5)));
  CHECK(applied["points"][0][1].get<double>() == doctest::Approx(std::sin(0.5)));
  CHECK(applied["max_product_change"].get<double>() < 1e-9);

  const Json decomposed =
      ok_result(api::respond("decompose", R"({"sig":"{0,1}","rows":[[1,0,0],[2,1,0],[0,0,1]]})"));
  CHECK(decomposed["recompose_error"].get<double>() < 1e-12);
  CHECK(decomposed["rotations"].size() == 1);

  const Json triangle = ok_result(api::respond("triangle", R"({"sig":"{0,1}","kind":"sas","b":3,"c":4,"alpha":1.5707963267948966})"));
  CHECK(triangle["a"].get<double>() == doctest::Approx(5.0));

  const Json right = ok_result(api::respond("triangle", R"({"sig":"{0,1}","kind":"right","a":3,"b":4})"));
  CHECK(right["c"].get<double>() == doctest::Approx(5.0));

  const Json area = ok_result(api::respond("area", R"({"sig":"{0,1}","a":3,"b":4})"));
  CHECK(area["value"].get<double>() == doctest::Approx(6.0));

  const Json tiling = ok_result(api::respond("tiling", R"({"pq":[4,4],"depth":2})"));
  CHECK(tiling["nodes"].size() == 13);

  const Json dual = ok_result(api::respond("dual", R"({"motion":{"sig":"{-1,0}","rotation":{"axis":1,"phi":0.4}}})"));
  CHECK(dual["sig"] == "{0,-1}");

  const Json spaces = ok_result(api::respond("spaces", ""));
  bool found = false;
  for (const Json& entry : spaces) found = found || (entry["name"] == "minkowski" && entry["sig"] == "{0,-1,1,1}");
  CHECK(found);
}

TEST_CASE("error statuses") {
  CHECK(api::respond("nothing", "{}").status == 404);
  CHECK(api::respond("measure", "{").status == 400);
  CHECK(api::respond("measure", R"({"sig":"{1,1}"})").status == 400);
  const api::Response domain = api::respond("measure", R"({"sig":"{1,1}","a":[[0,0,0]],"b":[[1,0,0]]})");
  CHECK(domain.status == 422);
  CHECK(Json::parse(domain.body)["error"]["code"] == "AllVectorsDegenerate");
  const api::Response mismatch = api::respond("triangle", R"({"sig":"{1,1}","kind":"right","a":0.3})");
  CHECK(mismatch.status == 422);
  CHECK(Json::parse(mismatch.body)["error"]["code"] == "Underdetermined");
}

TEST_CASE("responses are deterministic") {
  const std::string body = R"({"pq":[3,7],"depth":2})";
  CHECK(api::respond("tiling", body).body == api::respond("tiling", body).body);
}

TEST_CASE("HTTP service") {
  HttpService service;
  const int port = service.bind_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { service.listen_after_bind(); });
  service.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  const auto health = client.Get("/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(Json::parse(health->body)["result"]["status"] == "ok");

  const auto spaces = client.Get("/spaces");
  REQUIRE(spaces);
  CHECK(spaces->body.find(R"({"name":"minkowski","notes")") != std::string::npos);

  const auto connect = client.Post("/connectable", R"({"sig":"{0,-1}","x":[1,0,0],"y":[1,0,1]})", "application/json");
  REQUIRE(connect);
  CHECK(connect->status == 200);
  CHECK(Json::parse(connect->body)["result"]["kind"] == "unconnectable");

  const auto bad = client.Post("/measure", "not json", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  const auto domain = client.Post("/area", R"({"sig":"{1,1}","a":4,"b":4})", "application/json");
  REQUIRE(domain);
  CHECK((domain->status == 422 || domain->status == 200));
  const auto missing = client.Get("/nowhere");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  CHECK(Json::parse(missing->body)["ok"] == false);

  std::vector<std::thread> clients;
  std::atomic<int> successes{0};
  for (int i = 0; i < 8; ++i) {
    clients.emplace_back([&] {
      httplib::Client local("127.0.0.1", port);
      const auto r = local.Post("/tiling", R"({"pq":[4,4],"depth":2})", "application/json");
      if (r && r->status == 200) ++successes;
    });
  }
  for (std::thread& t : clients) t.join();
  CHECK(successes == 8);

  service.stop();
  worker.join();
}
