#include "mmroute/bench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <random>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "mmroute/bench/ranks.hpp"
#include "mmroute/error.hpp"
#include "mmroute/routing/csa.hpp"
#include "mmroute/routing/heuristics.hpp"
#include "mmroute/routing/link_dijkstra.hpp"
#include "mmroute/routing/transit_query.hpp"

namespace mmroute {

namespace {

using Clock = std::chrono::steady_clock;

/// Runs `query(i)` for every i, returning the mean time and settled count.
BenchRow measure(std::string algo, std::string param, std::size_t count,
                 const std::function<std::size_t(std::size_t)>& query) {
  BenchRow row{std::move(algo), std::move(param), 0.0, 0.0, count};
  double ms = 0.0, settled = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto start = Clock::now();
    settled += static_cast<double>(query(i));
    ms += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
  if (count > 0) {
    row.meanMs = ms / static_cast<double>(count);
    row.meanSettled = settled / static_cast<double>(count);
  }
  return row;
}

void warmUp(std::size_t count, std::size_t available,
            const std::function<std::size_t(std::size_t)>& query) {
  for (std::size_t i = 0; i < count && available > 0; ++i) query(i % available);
}

}  // namespace

std::vector<BenchRow> runBenchmark(const ModelBundle& models, const BenchConfig& config) {
  for (const std::string& algo : config.algorithms) {
    if (std::find(kBenchAlgorithms.begin(), kBenchAlgorithms.end(), algo) ==
        kBenchAlgorithms.end()) {
      throw InvalidArgument("unknown algorithm '" + algo + "'");
    }
  }
  auto wants = [&](std::initializer_list<const char*> names) {
    return std::any_of(names.begin(), names.end(), [&](const char* n) {
      return std::find(config.algorithms.begin(), config.algorithms.end(), n) !=
             config.algorithms.end();
    });
  };

  const RoadGraph& road = models.road;
  const ModeSet roadModes = config.modes & ModeSet::road();
  std::vector<BenchRow> rows;

  RankedQuerySet ranked;
  if (wants({"dijkstra", "astar", "alt", "linkgraph-dijkstra", "anr"})) {
    if (roadModes.empty()) throw ConfigError("road algorithms need a road mode");
    ranked = generateRankedQueries(road, config.sources, config.maxRankExponent,
                                   config.seed, roadModes);
  }
  std::optional<LandmarkTable> landmarks;
  if (wants({"alt"})) landmarks = precomputeLandmarks(road, config.landmarks, config.seed);

  for (const std::string& algo : config.algorithms) {
    std::function<std::size_t(NodeId, NodeId)> roadQuery;
    if (algo == "dijkstra") {
      roadQuery = [&](NodeId s, NodeId t) {
        return dijkstra(road, s, t, roadModes).stats.settledCount;
      };
    } else if (algo == "astar") {
      roadQuery = [&](NodeId s, NodeId t) {
        return aStar(road, s, t, roadModes,
                     CrowFliesToTarget(road, t, road.maxSpeedKmh()))
            .stats.settledCount;
      };
    } else if (algo == "alt") {
      roadQuery = [&](NodeId s, NodeId t) {
        return aStar(road, s, t, roadModes, LandmarksToTarget(*landmarks, t))
            .stats.settledCount;
      };
    } else if (algo == "linkgraph-dijkstra") {
      if (!models.link) throw ConfigError("no link graph available");
      roadQuery = [&](NodeId s, NodeId t) {
        return modifiedDijkstraLinkGraph(*models.link, s, t, config.modes, config.departure)
            .stats.settledCount;
      };
    } else if (algo == "anr") {
      if (!models.router) throw ConfigError("no router available");
      roadQuery = [&](NodeId s, NodeId t) {
        const AnrResult r = models.router->query(
            AnrQuery{s, t, config.departure, config.modes, kDefaultAccessNodes});
        return r.counters.settledNodes + r.counters.scannedConnections;
      };
    }

    if (roadQuery) {
      const std::size_t count = ranked.sources.size();
      warmUp(config.warmup, count, [&](std::size_t i) {
        return roadQuery(ranked.sources[i], ranked.targets[i].back());
      });
      for (unsigned k = 0; k <= ranked.maxExponent; ++k) {
        rows.push_back(measure(algo, std::to_string(std::size_t{1} << k), count,
                               [&](std::size_t i) {
                                 return roadQuery(ranked.sources[i], ranked.targets[i][k]);
                               }));
        spdlog::debug("{} rank 2^{} done", algo, k);
      }
      continue;
    }

    const Timetable& tt = models.timetable;
    if (tt.stops().size() < 2) throw ConfigError("transit algorithms need at least two stops");
    std::function<std::size_t(StopIndex, StopIndex, Seconds)> transitQuery;
    if (algo == "csa") {
      transitQuery = [&](StopIndex s, StopIndex t, Seconds tau) {
        return csaQuery(tt, s, t, tau).stats.scannedConnections;
      };
    } else {
      transitQuery = [&](StopIndex s, StopIndex t, Seconds tau) {
        return transitGraphEarliestArrival(models.transit, s, t, tau).stats.settledCount;
      };
    }
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<StopIndex> pick(0, static_cast<StopIndex>(tt.stops().size() - 1));
    std::vector<std::pair<StopIndex, StopIndex>> pairs;
    while (pairs.size() < config.queriesPerTimeStep) {
      const StopIndex a = pick(rng), b = pick(rng);
      if (a != b) pairs.emplace_back(a, b);
    }
    warmUp(config.warmup, pairs.size(), [&](std::size_t i) {
      return transitQuery(pairs[i].first, pairs[i].second, config.departure);
    });
    for (Seconds tau = 0; tau < 24 * 3600; tau += config.timeStep) {
      rows.push_back(measure(algo, std::to_string(tau), pairs.size(), [&](std::size_t i) {
        return transitQuery(pairs[i].first, pairs[i].second, tau);
      }));
    }
  }
  return rows;
}

void writeCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "algo,param,mean_ms,mean_settled,n\n";
  for (const BenchRow& r : rows) {
    out << fmt::format("{},{},{:.6f},{:.2f},{}\n", r.algo, r.param, r.meanMs,
                       r.meanSettled, r.n);
  }
}

}  // namespace mmroute
