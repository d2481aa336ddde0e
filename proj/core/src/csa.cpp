#include "mmroute/routing/csa.hpp"

#include <algorithm>
#include <stdexcept>

#include "mmroute/error.hpp"

namespace mmroute {

namespace {

constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

struct JourneyPointer {
  std::size_t enter = kUndefined;
  std::size_t exit = kUndefined;
  const Footpath* footpath = nullptr;
};

}  // namespace

CsaResult csaQuery(const Timetable& tt, StopIndex s, StopIndex t, Seconds tau,
                   CsaOptions options) {
  const std::size_t stopCount = tt.stops().size();
  if (s >= stopCount || t >= stopCount) throw InvalidNode("unknown stop");
  const auto& connections = tt.connections();

  std::vector<Seconds> best(stopCount, kInfiniteTime);
  std::vector<std::size_t> tripEntry(tt.trips().size(), kUndefined);
  std::vector<JourneyPointer> pointer(stopCount);
  // Vehicle arrival at t without its transfer footpath.
  Seconds vehicleArrival = kInfiniteTime;
  JourneyPointer vehiclePointer;
  CsaResult result;

  for (const Footpath& f : tt.footpathsFrom(s)) {
    if (tau + f.duration < best[f.to]) {
      best[f.to] = tau + f.duration;
      pointer[f.to] = {kUndefined, kUndefined, &f};
    }
  }
  if (!options.egressTransfer && s == t) vehicleArrival = tau;

  const Seconds& targetBest = options.egressTransfer ? best[t] : vehicleArrival;
  for (std::size_t i = tt.firstConnectionAtOrAfter(tau); i < connections.size(); ++i) {
    const Connection& c = connections[i];
    if (c.departureTime >= targetBest) break;
    ++result.stats.scannedConnections;
    if (tripEntry[c.trip] == kUndefined && c.departureTime < best[c.departureStop]) {
      continue;
    }
    if (tripEntry[c.trip] == kUndefined) tripEntry[c.trip] = i;
    if (c.arrivalStop == t && c.arrivalTime < vehicleArrival) {
      vehicleArrival = c.arrivalTime;
      vehiclePointer = {tripEntry[c.trip], i, nullptr};
    }
    if (c.arrivalTime >= best[c.arrivalStop]) continue;
    for (const Footpath& f : tt.footpathsFrom(c.arrivalStop)) {
      ++result.stats.relaxedFootpaths;
      if (c.arrivalTime + f.duration < best[f.to]) {
        best[f.to] = c.arrivalTime + f.duration;
        pointer[f.to] = {tripEntry[c.trip], i, &f};
      }
    }
  }

  const Seconds arrival = options.egressTransfer ? best[t] : vehicleArrival;
  if (arrival == kInfiniteTime) return result;

  Journey journey;
  journey.departure = tau;
  journey.arrival = arrival;
  std::vector<JourneyLeg> reversed;
  StopIndex at = t;
  auto addTrip = [&](const JourneyPointer& p) {
    const Connection& enter = connections[p.enter];
    const Connection& exit = connections[p.exit];
    reversed.push_back({JourneyLeg::Kind::kTrip, enter.departureStop, exit.arrivalStop,
                        enter.departureTime, exit.arrivalTime, enter.trip, p.enter,
                        p.exit});
    at = enter.departureStop;
  };
  auto addFootpath = [&](const Footpath& f, Seconds start) {
    reversed.push_back(
        {JourneyLeg::Kind::kFootpath, f.from, f.to, start, start + f.duration});
  };

  if (!options.egressTransfer) {
    if (vehiclePointer.enter == kUndefined) {
      result.journey = std::move(journey);
      return result;
    }
    addTrip(vehiclePointer);
  }
  for (std::size_t steps = 0; pointer[at].enter != kUndefined; ++steps) {
    if (steps > connections.size()) {
      throw std::logic_error("journey extraction did not terminate");
    }
    const JourneyPointer p = pointer[at];
    addFootpath(*p.footpath, connections[p.exit].arrivalTime);
    addTrip(p);
  }
  if (pointer[at].footpath == nullptr) {
    throw std::logic_error("journey does not start at the source");
  }
  addFootpath(*pointer[at].footpath, tau);
  std::reverse(reversed.begin(), reversed.end());
  journey.legs = std::move(reversed);
  result.journey = std::move(journey);
  return result;
}

}  // namespace mmroute
