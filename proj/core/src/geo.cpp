#include "mmroute/geo.hpp"

#include <string>

#include "mmroute/error.hpp"

namespace mmroute {

bool GeoPoint::isValidRadians(double lat, double lng) noexcept {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  return std::isfinite(lat) && std::isfinite(lng) && lat > -kHalfPi &&
         lat < kHalfPi && lng >= -std::numbers::pi && lng < std::numbers::pi;
}

GeoPoint GeoPoint::fromRadians(double lat, double lng) {
  if (!isValidRadians(lat, lng)) {
    throw InvalidArgument("coordinate out of range: lat=" +
                          std::to_string(lat) + " rad, lng=" +
                          std::to_string(lng) + " rad");
  }
  return GeoPoint(lat, lng);
}

GeoPoint GeoPoint::fromDegrees(double latDeg, double lngDeg) {
  return fromRadians(degreesToRadians(latDeg), degreesToRadians(lngDeg));
}

}  // namespace mmroute
