#include "mmroute/server/service.hpp"

#include <charconv>
#include <nlohmann/json.hpp>

#include "mmroute/error.hpp"
#include "mmroute/ingest/gtfs.hpp"

namespace mmroute {

namespace {

using nlohmann::json;

HttpResponse error(int status, const std::string& message) {
  return {status, json{{"error", message}}.dump()};
}

/// Request field outside the accepted domain.
class BadRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Seconds parseDepTime(const json& value) {
  if (value.is_number_integer()) {
    const auto v = value.get<std::int64_t>();
    if (v < 0 || v > 7 * 86400) throw BadRequest("depTime out of range");
    return static_cast<Seconds>(v);
  }
  if (!value.is_string()) throw BadRequest("depTime must be seconds or a time string");
  std::string text = value.get<std::string>();
  if (const auto t = text.find('T'); t != std::string::npos) text = text.substr(t + 1);
  if (std::count(text.begin(), text.end(), ':') == 1) text += ":00";
  const auto parsed = parseGtfsTime(text);
  if (!parsed) throw BadRequest("unreadable depTime '" + value.get<std::string>() + "'");
  return *parsed;
}

ModeSet parseModes(const json& value) {
  if (!value.is_array()) throw BadRequest("modes must be an array of mode names");
  ModeSet modes;
  for (const json& m : value) {
    if (!m.is_string()) throw BadRequest("modes must be an array of mode names");
    const auto mode = parseMode(m.get<std::string>());
    if (!mode) throw BadRequest("unknown mode '" + m.get<std::string>() + "'");
    modes.insert(*mode);
  }
  if (modes.empty()) throw BadRequest("at least one mode is required");
  return modes;
}

Location parseLocation(const json& value, const RoadGraph& road, const char* field) {
  if (value.is_number_integer()) {
    const auto node = road.findNode(value.get<std::int64_t>());
    if (!node) throw BadRequest(std::string("unknown node in '") + field + "'");
    return *node;
  }
  if (value.is_object() && value.contains("lat") && value.contains("lng") &&
      value["lat"].is_number() && value["lng"].is_number()) {
    try {
      return GeoPoint::fromDegrees(value["lat"].get<double>(), value["lng"].get<double>());
    } catch (const InvalidArgument& e) {
      throw BadRequest(std::string("invalid coordinate in '") + field + "': " + e.what());
    }
  }
  throw BadRequest(std::string("'") + field + "' must be a node id or {lat, lng}");
}

json toJson(const MultiModalJourney& journey) {
  json legs = json::array();
  for (const MultiModalLeg& leg : journey.legs) {
    json coordinates = json::array();
    for (const GeoPoint& p : leg.geometry) {
      coordinates.push_back({p.latDegrees(), p.lngDegrees()});
    }
    json out{{"mode", toString(leg.mode)},
             {"coordinates", std::move(coordinates)},
             {"departure", leg.departure},
             {"arrival", leg.arrival}};
    if (!leg.name.empty()) out["name"] = leg.name;
    legs.push_back(std::move(out));
  }
  return json{{"departure", journey.departure},
              {"arrival", journey.arrival},
              {"totalCost", journey.totalCost},
              {"legs", std::move(legs)}};
}

std::optional<double> parseCoordinate(std::optional<std::string_view> text) {
  if (!text) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), v);
  if (text->empty() || ec != std::errc{} || ptr != text->data() + text->size()) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

HttpResponse RoutingService::handleRoute(std::string_view body) const {
  const ModelBundle* models = models_.load();
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error&) {
    return error(400, "request body is not valid JSON");
  }
  if (!request.is_object()) return error(400, "request body must be a JSON object");
  for (const char* field : {"depTime", "modes", "from", "to"}) {
    if (!request.contains(field)) return error(400, std::string("missing field '") + field + "'");
  }
  if (models == nullptr || models->road.empty() || !models->router) {
    return error(503, "no road graph loaded");
  }
  try {
    AnrQuery query;
    query.depTime = parseDepTime(request["depTime"]);
    query.modes = parseModes(request["modes"]);
    query.from = parseLocation(request["from"], models->road, "from");
    query.to = parseLocation(request["to"], models->road, "to");
    const AnrResult result = models->router->query(query);

    json journeys = json::array();
    if (result.best) journeys.push_back(toJson(*result.best));
    if (result.roadOnly && result.best &&
        result.roadOnly->totalCost != result.best->totalCost) {
      journeys.push_back(toJson(*result.roadOnly));
    }
    return {200, json{{"journeys", std::move(journeys)}}.dump()};
  } catch (const BadRequest& e) {
    return error(400, e.what());
  } catch (const InvalidArgument& e) {
    return error(400, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

HttpResponse RoutingService::handleNearest(std::optional<std::string_view> lat,
                                           std::optional<std::string_view> lng) const {
  const auto la = parseCoordinate(lat);
  const auto lo = parseCoordinate(lng);
  if (!la || !lo) return error(400, "lat and lng must be numbers in degrees");
  if (!GeoPoint::isValidRadians(degreesToRadians(*la), degreesToRadians(*lo))) {
    return error(400, "coordinate out of range");
  }
  const ModelBundle* models = models_.load();
  if (models == nullptr || models->roadIndex.empty()) {
    return error(503, "road node index not available");
  }
  const GeoIndex::Hit hit = models->roadIndex.nearest(GeoPoint::fromDegrees(*la, *lo));
  const RoadNode& node = models->road.node(hit.id);
  return {200, json{{"id", node.id},
                    {"lat", node.point.latDegrees()},
                    {"lng", node.point.lngDegrees()}}
                   .dump()};
}

}  // namespace mmroute
