#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mmroute/models.hpp"

namespace mmroute {

inline const std::vector<std::string> kBenchAlgorithms = {
    "dijkstra", "astar", "alt", "csa", "graph-dijkstra-transit", "linkgraph-dijkstra", "anr"};

struct BenchConfig {
  std::vector<std::string> algorithms;
  std::size_t sources = 50;
  unsigned maxRankExponent = 15;
  std::uint64_t seed = 1;
  ModeSet modes = ModeSet::all();
  Seconds departure = 12 * 3600;  // multi-modal queries
  std::size_t landmarks = 24;
  std::size_t warmup = 10;
  std::size_t queriesPerTimeStep = 50;
  Seconds timeStep = 600;
};

struct BenchRow {
  std::string algo;
  std::string param;
  double meanMs = 0.0;
  double meanSettled = 0.0;
  std::size_t n = 0;
};

/// Runs every configured algorithm sequentially. Road algorithms report one
/// row per Dijkstra rank, transit algorithms one row per departure time step.
/// Throws InvalidArgument for unknown algorithm names.
std::vector<BenchRow> runBenchmark(const ModelBundle& models, const BenchConfig& config);

/// Header `algo,param,mean_ms,mean_settled,n` followed by one line per row.
void writeCsv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace mmroute
