#include <httplib.h>

#include "mmroute/server/service.hpp"

namespace mmroute {

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(const RoutingService& service,
                       std::optional<std::filesystem::path> staticDir)
    : impl_(std::make_unique<Impl>()) {
  auto reply = [](httplib::Response& res, const HttpResponse& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  impl_->server.Post("/route", [&service, reply](const httplib::Request& req,
                                                 httplib::Response& res) {
    reply(res, service.handleRoute(req.body));
  });
  impl_->server.Get("/nearest", [&service, reply](const httplib::Request& req,
                                                  httplib::Response& res) {
    auto param = [&req](const char* name) -> std::optional<std::string> {
      if (!req.has_param(name)) return std::nullopt;
      return req.get_param_value(name);
    };
    const auto lat = param("lat"), lng = param("lng");
    reply(res, service.handleNearest(lat ? std::optional<std::string_view>(*lat) : std::nullopt,
                                     lng ? std::optional<std::string_view>(*lng) : std::nullopt));
  });
  if (staticDir) impl_->server.set_mount_point("/", staticDir->string());
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace mmroute
