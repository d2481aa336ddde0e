#include "mmroute/ingest/osm.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <expat.h>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "mmroute/error.hpp"

namespace mmroute {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

const char* attribute(const XML_Char** attrs, const char* name) {
  for (; *attrs != nullptr; attrs += 2) {
    if (std::strcmp(attrs[0], name) == 0) return attrs[1];
  }
  return nullptr;
}

std::optional<std::int64_t> parseId(const char* text) {
  if (text == nullptr) return std::nullopt;
  std::int64_t v = 0;
  const char* end = text + std::strlen(text);
  const auto [ptr, ec] = std::from_chars(text, end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

std::optional<double> parseDouble(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return v;
}

struct Way {
  std::int64_t id = 0;
  std::vector<std::int64_t> refs;
  OsmTags tags;
};

/// Expat driver calling `start(name, attrs)` and `end(name)` on a handler.
template <class Handler>
void runExpat(std::istream& in, Handler& handler) {
  XML_Parser parser = XML_ParserCreate(nullptr);
  if (parser == nullptr) throw Error("cannot create XML parser");
  struct Guard {
    XML_Parser p;
    ~Guard() { XML_ParserFree(p); }
  } guard{parser};
  XML_SetUserData(parser, &handler);
  XML_SetElementHandler(
      parser,
      [](void* data, const XML_Char* name, const XML_Char** attrs) {
        static_cast<Handler*>(data)->start(name, attrs);
      },
      [](void* data, const XML_Char* name) { static_cast<Handler*>(data)->end(name); });

  std::vector<char> buffer(1 << 16);
  std::size_t total = 0;
  for (;;) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    const auto got = in.gcount();
    const bool last = got < static_cast<std::streamsize>(buffer.size());
    total += static_cast<std::size_t>(got);
    if (last && total == 0) return;
    if (XML_Parse(parser, buffer.data(), static_cast<int>(got), last) ==
        XML_STATUS_ERROR) {
      throw ParseError(XML_ErrorString(XML_GetErrorCode(parser)),
                       fmt::format("line {}, column {}",
                                   XML_GetCurrentLineNumber(parser),
                                   XML_GetCurrentColumnNumber(parser)));
    }
    if (last) break;
  }
}

struct WayPass {
  const OsmFilter* filter;
  std::vector<Way> kept;
  std::unordered_set<std::int64_t> needed;
  Way current;
  bool inWay = false;

  void start(const char* name, const XML_Char** attrs) {
    if (std::strcmp(name, "way") == 0) {
      inWay = true;
      current = Way{};
      current.id = parseId(attribute(attrs, "id")).value_or(0);
    } else if (!inWay) {
      return;
    } else if (std::strcmp(name, "nd") == 0) {
      if (const auto ref = parseId(attribute(attrs, "ref"))) current.refs.push_back(*ref);
    } else if (std::strcmp(name, "tag") == 0) {
      const char* k = attribute(attrs, "k");
      const char* v = attribute(attrs, "v");
      if (k != nullptr && v != nullptr) current.tags.emplace(k, v);
    }
  }

  void end(const char* name) {
    if (std::strcmp(name, "way") != 0) return;
    inWay = false;
    if (!filterWay(current.tags, *filter)) return;
    needed.insert(current.refs.begin(), current.refs.end());
    kept.push_back(std::move(current));
  }
};

struct NodePass {
  const std::unordered_set<std::int64_t>* needed;
  RoadGraphBuilder* builder;
  std::vector<std::string>* warnings;

  void start(const char* name, const XML_Char** attrs) {
    if (std::strcmp(name, "node") != 0) return;
    const auto id = parseId(attribute(attrs, "id"));
    if (!id || !needed->contains(*id) || builder->findNode(*id)) return;
    const char* lat = attribute(attrs, "lat");
    const char* lon = attribute(attrs, "lon");
    const auto latDeg = lat ? parseDouble(lat) : std::nullopt;
    const auto lonDeg = lon ? parseDouble(lon) : std::nullopt;
    if (!latDeg || !lonDeg) {
      warnings->push_back(fmt::format("node {} has no valid coordinate", *id));
      return;
    }
    try {
      builder->addNode(*id, GeoPoint::fromDegrees(*latDeg, *lonDeg));
    } catch (const InvalidArgument& e) {
      warnings->push_back(fmt::format("node {} skipped: {}", *id, e.what()));
    }
  }
  void end(const char*) {}
};

void addWayEdges(const Way& way, const OsmOptions& options, RoadGraphBuilder& builder,
                 std::vector<std::string>& warnings) {
  const auto highwayIt = way.tags.find("highway");
  const std::string_view highway =
      highwayIt == way.tags.end() ? std::string_view{} : highwayIt->second;

  std::optional<double> car;
  if (const auto it = way.tags.find("maxspeed"); it != way.tags.end()) {
    car = parseMaxSpeed(it->second);
  }
  if (!car) car = options.speeds.lookup(highway);
  if (!car) {
    warnings.push_back(fmt::format("way {} has no known speed for highway '{}'; using {} km/h",
                                   way.id, highway, options.fallbackSpeedKmh));
    car = options.fallbackSpeedKmh;
  }
  const ModeSet modes = modesForHighway(highway);
  const ModeSpeeds speeds = options.modeSpeeds.speedsFor(modes, *car);

  bool forward = true, backward = true;
  if (const auto it = way.tags.find("oneway"); it != way.tags.end()) {
    const std::string_view v = it->second;
    if (v == "yes" || v == "true" || v == "1") backward = false;
    if (v == "-1" || v == "reverse") forward = false;
  }
  std::uint32_t name = kNoName;
  if (const auto it = way.tags.find("name"); it != way.tags.end()) {
    name = builder.internName(it->second);
  }

  for (std::size_t i = 0; i + 1 < way.refs.size(); ++i) {
    const auto a = builder.findNode(way.refs[i]);
    const auto b = builder.findNode(way.refs[i + 1]);
    if (!a || !b) {
      warnings.push_back(fmt::format("way {} references undefined node {}; segment skipped",
                                     way.id, a ? way.refs[i + 1] : way.refs[i]));
      continue;
    }
    const double distance = asTheCrowFlies(builder.point(*a), builder.point(*b));
    if (forward) builder.addEdge(RoadEdge{*a, *b, distance, modes, speeds, name});
    if (backward) builder.addEdge(RoadEdge{*b, *a, distance, modes, speeds, name});
  }
}

}  // namespace

OsmFilter OsmFilter::defaults() {
  OsmFilter f;
  for (const char* v :
       {"motorway", "trunk", "primary", "secondary", "tertiary", "residential",
        "living_street", "unclassified", "cycleway", "motorway_link", "trunk_link",
        "primary_link", "secondary_link", "tertiary_link", "residential_link"}) {
    f.keep.emplace("highway", v);
  }
  f.keep.emplace("way", "primary");
  f.keep.emplace("way", "seconday");
  for (const auto& [k, v] : std::initializer_list<std::pair<const char*, const char*>>{
           {"area", "yes"},
           {"train", "yes"},
           {"access", "no"},
           {"type", "multipolygon"},
           {"railway", "platform"},
           {"railway", "station"},
           {"highway", "proposed"},
           {"highway", "construction"},
           {"building", "yes"},
           {"building", "train_station"}}) {
    f.drop.emplace(k, v);
  }
  return f;
}

OsmFilter OsmFilter::parse(std::istream& in) {
  OsmFilter f;
  std::set<std::pair<std::string, std::string>>* section = nullptr;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (text == "--KEEP") {
      section = &f.keep;
    } else if (text == "--DROP") {
      section = &f.drop;
    } else {
      const auto eq = text.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("expected key=value", fmt::format("line {}", line));
      }
      if (section == nullptr) {
        throw ParseError("pair outside a --KEEP or --DROP section",
                         fmt::format("line {}", line));
      }
      section->emplace(std::string(trim(text.substr(0, eq))),
                       std::string(trim(text.substr(eq + 1))));
    }
  }
  return f;
}

OsmFilter OsmFilter::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open filter file " + file.string());
  return parse(in);
}

bool filterWay(const OsmTags& tags, const OsmFilter& filter) {
  bool keep = false;
  for (const auto& [k, v] : tags) {
    const std::pair<std::string, std::string> pair{k, v};
    if (filter.drop.contains(pair)) return false;
    keep = keep || filter.keep.contains(pair);
  }
  return keep;
}

SpeedTable SpeedTable::defaults() {
  return SpeedTable{{{"motorway", 120},      {"trunk", 110},          {"primary", 100},
                     {"secondary", 80},      {"tertiary", 70},        {"motorway_link", 50},
                     {"trunk_link", 50},     {"primary_link", 50},    {"secondary_link", 50},
                     {"residential", 50},    {"unclassified", 40},    {"unsurfaced", 30},
                     {"road", 20},           {"cycleway", 14},        {"living_street", 7},
                     {"service", 7}}};
}

std::optional<double> SpeedTable::lookup(std::string_view highway) const {
  const auto it = kmh.find(highway);
  if (it == kmh.end()) return std::nullopt;
  return it->second;
}

ModeSet modesForHighway(std::string_view highway) {
  using M = TransportMode;
  if (highway == "cycleway") return {M::kFoot, M::kBike};
  if (highway == "motorway" || highway == "trunk" || highway == "motorway_link" ||
      highway == "trunk_link") {
    return {M::kCar};
  }
  return ModeSet::road();
}

std::optional<double> parseMaxSpeed(std::string_view value) {
  const auto v = parseDouble(value);
  if (!v || !(*v > 0.0) || !std::isfinite(*v)) return std::nullopt;
  return v;
}

OsmResult parseOsm(std::istream& in, const OsmOptions& options) {
  if (!(options.fallbackSpeedKmh > 0.0)) {
    throw ConfigError("fallback speed must be positive");
  }
  OsmResult result;
  WayPass ways{&options.filter, {}, {}, {}, false};

  const auto startPos = in.tellg();
  std::istringstream buffered;
  std::istream* second = &in;
  if (startPos == std::streampos(-1)) {
    std::ostringstream copy;
    copy << in.rdbuf();
    buffered.str(std::move(copy).str());
    runExpat(buffered, ways);
    buffered.clear();
    buffered.seekg(0);
    second = &buffered;
  } else {
    runExpat(in, ways);
    in.clear();
    in.seekg(startPos);
  }

  RoadGraphBuilder builder;
  NodePass nodes{&ways.needed, &builder, &result.warnings};
  runExpat(*second, nodes);

  for (const Way& way : ways.kept) addWayEdges(way, options, builder, result.warnings);
  result.keptWays = ways.kept.size();
  result.graph = std::move(builder).build();
  return result;
}

OsmResult parseOsmFile(const std::filesystem::path& file, const OsmOptions& options) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot open OSM file " + file.string());
  return parseOsm(in, options);
}

}  // namespace mmroute
