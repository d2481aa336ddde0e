#include "mmroute/model/mode.hpp"

#include "mmroute/error.hpp"

namespace mmroute {

std::string_view toString(TransportMode mode) noexcept {
  switch (mode) {
    case TransportMode::kFoot: return "foot";
    case TransportMode::kBike: return "bike";
    case TransportMode::kTram: return "tram";
    case TransportMode::kCar: return "car";
  }
  return "?";
}

std::optional<TransportMode> parseMode(std::string_view name) noexcept {
  for (TransportMode m : kAllModes) {
    if (toString(m) == name) return m;
  }
  return std::nullopt;
}

ModeSet ModeSet::parse(std::string_view list) {
  ModeSet result;
  while (!list.empty()) {
    const auto comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      auto mode = parseMode(item);
      if (!mode) {
        throw InvalidArgument("unknown transport mode '" + std::string(item) +
                              "'");
      }
      result.insert(*mode);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return result;
}

std::vector<TransportMode> ModeSet::modes() const {
  std::vector<TransportMode> out;
  for (TransportMode m : kAllModes) {
    if (contains(m)) out.push_back(m);
  }
  return out;
}

std::string ModeSet::toString() const {
  std::string out;
  for (TransportMode m : modes()) {
    if (!out.empty()) out += ',';
    out += mmroute::toString(m);
  }
  return out;
}

}  // namespace mmroute
