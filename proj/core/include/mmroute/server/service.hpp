#pragma once

#include <atomic>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "mmroute/models.hpp"

namespace mmroute {

struct HttpResponse {
  int status = 200;
  std::string body;  // JSON
};

/// Request handlers of the query service, independent of any HTTP library.
/// Responses depend only on the request and the models.
class RoutingService {
 public:
  /// `models` may be null while they are still being built; requests then
  /// answer 503.
  explicit RoutingService(const ModelBundle* models) noexcept : models_(models) {}

  void setModels(const ModelBundle* models) noexcept { models_.store(models); }

  /// Body: {"depTime": seconds | "HH:MM[:SS]" | "YYYY-MM-DDTHH:MM[:SS]",
  ///        "modes": ["car", "bike", "foot", "tram"],
  ///        "from": id | {"lat": deg, "lng": deg}, "to": ...}
  HttpResponse handleRoute(std::string_view body) const;
  /// Nearest road node to (lat, lng) in degrees as {"id", "lat", "lng"}.
  HttpResponse handleNearest(std::optional<std::string_view> lat,
                             std::optional<std::string_view> lng) const;

 private:
  std::atomic<const ModelBundle*> models_;
};

/// HTTP front end: POST /route, GET /nearest and static files.
class HttpServer {
 public:
  HttpServer(const RoutingService& service,
             std::optional<std::filesystem::path> staticDir = std::nullopt);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds to `port` (0 picks a free port) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called. Requires a successful bind().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mmroute
