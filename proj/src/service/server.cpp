#include "homspace/server.hpp"

#include "homspace/api.hpp"

// After Eigen: <resolv.h> defines a `_res` macro that clashes with Eigen internals.
#include <httplib.h>

namespace homspace {

struct HttpService::Impl {
  httplib::Server server;
};

namespace {

void reply(httplib::Response& res, const api::Response& out) {
  res.status = out.status;
  res.set_content(out.body, "application/json");
}

}  // namespace

HttpService::HttpService() : impl_(std::make_unique<Impl>()) {
  auto& server = impl_->server;
  for (const char* op : {"measure", "decompose", "triangle", "area", "connectable", "apply", "tiling",
                                "dual", "space"}) {
    server.Post(std::string("/") + op, [op = std::string(op)](const httplib::Request& req, httplib::Response& res) {
      reply(res, api::respond(op, req.body));
    });
  }
  server.Get("/spaces", [](const httplib::Request&, httplib::Response& res) { reply(res, api::respond("spaces", "")); });
  server.Get("/health", [](const httplib::Request&, httplib::Response& res) { reply(res, api::respond("health", "")); });
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      res.set_content(R"({"error":{"code":"NotFound","message":"no such route"},"ok":false})", "application/json");
    }
  });
}

HttpService::~HttpService() { stop(); }

bool HttpService::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int HttpService::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool HttpService::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpService::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

void HttpService::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace homspace
