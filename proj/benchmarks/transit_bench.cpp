#include <benchmark/benchmark.h>

#include <random>

#include "mmroute/ingest/gtfs.hpp"
#include "mmroute/routing/csa.hpp"
#include "mmroute/routing/transit_query.hpp"

namespace {

using namespace mmroute;

// A few hundred stops on a line network with trips every few minutes.
const GtfsFeed& feed() {
  static const GtfsFeed f = [] {
    GtfsFeed out;
    std::mt19937_64 rng(4);
    constexpr int kStops = 400;
    for (int i = 0; i < kStops; ++i) {
      out.stops.push_back({"s" + std::to_string(i), "",
                           GeoPoint::fromDegrees(47.0 + 0.01 * (i / 20), 8.0 + 0.01 * (i % 20))});
    }
    std::uniform_int_distribution<int> stop(0, kStops - 1), hop(1, 6), length(5, 25);
    for (int t = 0; t < 4000; ++t) {
      out.trips.push_back({"t" + std::to_string(t), ""});
      TripSchedule schedule;
      Seconds clock = 4 * 3600 + (t * 17) % (20 * 3600);
      int at = stop(rng);
      for (int e = length(rng); e > 0; --e) {
        schedule.events.push_back({static_cast<StopIndex>(at), clock, clock + 30});
        clock += 30 + 60 * hop(rng);
        at = (at + hop(rng)) % kStops;
      }
      out.schedules.push_back(std::move(schedule));
    }
    return out;
  }();
  return f;
}

void BM_ConnectionScan(benchmark::State& state) {
  static const Timetable tt = buildTimetable(feed());
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<StopIndex> stop(0, static_cast<StopIndex>(tt.stops().size() - 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(csaQuery(tt, stop(rng), stop(rng), static_cast<Seconds>(state.range(0))));
  }
}

void BM_TimeExpandedSearch(benchmark::State& state) {
  static const TransitGraph g = buildTransitGraph(feed());
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<StopIndex> stop(0, 399);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        transitGraphEarliestArrival(g, stop(rng), stop(rng), static_cast<Seconds>(state.range(0))));
  }
}

BENCHMARK(BM_ConnectionScan)->Arg(6 * 3600)->Arg(12 * 3600)->Arg(20 * 3600)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TimeExpandedSearch)->Arg(6 * 3600)->Arg(12 * 3600)->Arg(20 * 3600)->Unit(benchmark::kMicrosecond);

}  // namespace
