#include <csignal>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "mmroute/bench/harness.hpp"
#include "mmroute/error.hpp"
#include "mmroute/models.hpp"
#include "mmroute/server/service.hpp"

namespace {

using namespace mmroute;

struct Inputs {
  std::string osm;
  std::string gtfs;
  std::string snapshot;
  std::string date;
  std::string filter;

  void addTo(CLI::App& cmd) {
    cmd.add_option("--osm", osm, "OSM XML file")->envname("MMROUTE_OSM");
    cmd.add_option("--gtfs", gtfs, "Directory of an extracted GTFS feed")
        ->envname("MMROUTE_GTFS");
    cmd.add_option("--snapshot", snapshot, "Model snapshot instead of --osm/--gtfs")
        ->envname("MMROUTE_SNAPSHOT");
    cmd.add_option("--date", date, "Service day YYYY-MM-DD (default: every trip)")
        ->envname("MMROUTE_DATE");
    cmd.add_option("--filter", filter, "OSM way filter file")->envname("MMROUTE_FILTER");
  }

  GtfsConfig gtfsConfig() const {
    GtfsConfig config;
    if (!date.empty()) {
      config.serviceDate = parseDate(date);
      if (!config.serviceDate) throw ConfigError("invalid --date '" + date + "'");
    }
    return config;
  }

  std::unique_ptr<ModelBundle> load() const {
    const GtfsConfig config = gtfsConfig();
    if (!snapshot.empty()) {
      std::ifstream in(snapshot, std::ios::binary);
      if (!in) throw ConfigError("cannot open snapshot " + snapshot);
      auto [road, feed] = readSnapshot(in);
      return buildModels(std::move(road), feed, config);
    }
    if (osm.empty()) throw ConfigError("--osm or --snapshot is required");
    OsmOptions options;
    if (!filter.empty()) options.filter = OsmFilter::load(filter);
    std::optional<std::filesystem::path> feed;
    if (!gtfs.empty()) feed = gtfs;
    return loadModels(osm, feed, config, options);
  }
};

std::vector<std::string> splitList(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

HttpServer* runningServer = nullptr;

void onSignal(int) {
  if (runningServer != nullptr) runningServer->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-modal route planner"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Debug logging");

  Inputs benchInputs;
  BenchConfig bench;
  std::string algos = "dijkstra,astar,alt";
  std::string benchModes = "car,bike,foot,tram";
  std::string benchTime = "12:00";
  std::string out;
  auto* benchCmd = app.add_subcommand("bench", "Run the query benchmark and write CSV");
  benchInputs.addTo(*benchCmd);
  benchCmd->add_option("--algo", algos, "Comma separated algorithms")->capture_default_str();
  benchCmd->add_option("--sources", bench.sources, "Random sources or stop pairs per point")
      ->capture_default_str();
  benchCmd->add_option("--max-rank", bench.maxRankExponent,
                       "Largest Dijkstra rank exponent k (ranks 2^0..2^k)")
      ->capture_default_str();
  benchCmd->add_option("--seed", bench.seed)->capture_default_str();
  benchCmd->add_option("--modes", benchModes, "Allowed modes")->capture_default_str();
  benchCmd->add_option("--time", benchTime, "Departure for multi-modal queries (HH:MM)")
      ->capture_default_str();
  benchCmd->add_option("--landmarks", bench.landmarks)->capture_default_str();
  benchCmd->add_option("--out", out, "CSV output file (default: stdout)");

  Inputs serveInputs;
  int port = 8080;
  std::string host = "0.0.0.0";
  std::string staticDir;
  auto* serveCmd = app.add_subcommand("serve", "Answer route and nearest-node requests");
  serveInputs.addTo(*serveCmd);
  serveCmd->add_option("--port", port)->envname("MMROUTE_PORT")->capture_default_str();
  serveCmd->add_option("--host", host)->envname("MMROUTE_HOST")->capture_default_str();
  serveCmd->add_option("--static-dir", staticDir, "Directory of web UI files")
      ->envname("MMROUTE_STATIC_DIR");

  Inputs snapInputs;
  std::string snapOut;
  auto* snapCmd = app.add_subcommand("snapshot", "Write a binary model snapshot");
  snapInputs.addTo(*snapCmd);
  snapCmd->add_option("--out", snapOut, "Snapshot file")->required();

  CLI11_PARSE(app, argc, argv);
  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::info);
  spdlog::set_default_logger(spdlog::stderr_color_mt("mmroute"));
  if (verbose) spdlog::set_level(spdlog::level::debug);

  try {
    if (*benchCmd) {
      bench.algorithms = splitList(algos);
      bench.modes = ModeSet::parse(benchModes);
      bench.queriesPerTimeStep = bench.sources;
      const auto time = parseGtfsTime(benchTime.size() == 5 ? benchTime + ":00" : benchTime);
      if (!time) throw ConfigError("invalid --time '" + benchTime + "'");
      bench.departure = *time;
      const auto models = benchInputs.load();
      const auto rows = runBenchmark(*models, bench);
      if (out.empty()) {
        writeCsv(std::cout, rows);
      } else {
        std::ofstream file(out);
        if (!file) throw ConfigError("cannot write " + out);
        writeCsv(file, rows);
      }
    } else if (*serveCmd) {
      const auto models = serveInputs.load();
      RoutingService service(models.get());
      std::optional<std::filesystem::path> dir;
      if (!staticDir.empty()) dir = staticDir;
      HttpServer server(service, dir);
      const int bound = server.bind(host, port);
      if (bound < 0) throw ConfigError("cannot bind " + host + ":" + std::to_string(port));
      runningServer = &server;
      std::signal(SIGINT, onSignal);
      std::signal(SIGTERM, onSignal);
      spdlog::info("listening on {}:{}", host, bound);
      server.listen();
      runningServer = nullptr;
    } else if (*snapCmd) {
      if (snapInputs.osm.empty()) throw ConfigError("--osm is required");
      OsmOptions options;
      if (!snapInputs.filter.empty()) options.filter = OsmFilter::load(snapInputs.filter);
      OsmResult roads = parseOsmFile(snapInputs.osm, options);
      GtfsFeed feed;
      if (!snapInputs.gtfs.empty()) feed = parseGtfs(snapInputs.gtfs, snapInputs.gtfsConfig());
      std::ofstream file(snapOut, std::ios::binary);
      if (!file) throw ConfigError("cannot write " + snapOut);
      writeSnapshot(file, roads.graph, feed);
      spdlog::info("snapshot written to {}", snapOut);
    }
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
