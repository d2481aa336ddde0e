#pragma once

#include <cmath>
#include <compare>
#include <numbers>

namespace mmroute {

/// Mean earth radius in meters used by the crow-flies metric.
inline constexpr double kEarthRadiusMeters = 6'371'000.0;

constexpr double degreesToRadians(double deg) noexcept {
  return deg * std::numbers::pi / 180.0;
}

constexpr double radiansToDegrees(double rad) noexcept {
  return rad * 180.0 / std::numbers::pi;
}

/// Geographic coordinate stored in radians.
///
/// Latitude lies in the open interval (-pi/2, pi/2) and longitude in the
/// half-open interval [-pi, pi). Construction outside that domain throws
/// InvalidArgument; nothing is wrapped or clamped.
class GeoPoint {
 public:
  /// The origin (0, 0). Needed for containers; always valid.
  constexpr GeoPoint() noexcept = default;

  static GeoPoint fromRadians(double lat, double lng);
  static GeoPoint fromDegrees(double latDeg, double lngDeg);

  static bool isValidRadians(double lat, double lng) noexcept;

  constexpr double lat() const noexcept { return lat_; }
  constexpr double lng() const noexcept { return lng_; }
  double latDegrees() const noexcept { return radiansToDegrees(lat_); }
  double lngDegrees() const noexcept { return radiansToDegrees(lng_); }

  friend constexpr bool operator==(const GeoPoint&, const GeoPoint&) = default;
  friend constexpr auto operator<=>(const GeoPoint&, const GeoPoint&) = default;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(lat_, lng_);
  }

 private:
  constexpr GeoPoint(double lat, double lng) noexcept : lat_(lat), lng_(lng) {}

  double lat_ = 0.0;
  double lng_ = 0.0;
};

/// Equirectangular approximation of the distance between two points, in
/// meters.
inline double asTheCrowFlies(const GeoPoint& a, const GeoPoint& b) noexcept {
  const double x = (b.lng() - a.lng()) * std::cos((a.lat() + b.lat()) / 2.0);
  const double y = b.lat() - a.lat();
  return std::sqrt(x * x + y * y) * kEarthRadiusMeters;
}

/// Function object form of asTheCrowFlies, usable as a cover tree metric.
struct CrowFliesMetric {
  double operator()(const GeoPoint& a, const GeoPoint& b) const noexcept {
    return asTheCrowFlies(a, b);
  }
};

}  // namespace mmroute
