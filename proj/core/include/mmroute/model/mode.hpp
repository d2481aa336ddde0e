#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmroute {

/// Transportation modes, declared in their speed order
/// foot < bike < tram < car.
enum class TransportMode : std::uint8_t { kFoot = 0, kBike = 1, kTram = 2, kCar = 3 };

inline constexpr std::size_t kModeCount = 4;
inline constexpr std::array<TransportMode, kModeCount> kAllModes = {
    TransportMode::kFoot, TransportMode::kBike, TransportMode::kTram,
    TransportMode::kCar};

std::string_view toString(TransportMode mode) noexcept;
std::optional<TransportMode> parseMode(std::string_view name) noexcept;

/// Small bit set of transportation modes.
class ModeSet {
 public:
  constexpr ModeSet() noexcept = default;
  constexpr ModeSet(std::initializer_list<TransportMode> modes) noexcept {
    for (TransportMode m : modes) bits_ |= bit(m);
  }

  static constexpr ModeSet all() noexcept { return fromBits(0b1111); }
  static constexpr ModeSet road() noexcept {
    return {TransportMode::kFoot, TransportMode::kBike, TransportMode::kCar};
  }
  static constexpr ModeSet fromBits(std::uint8_t bits) noexcept {
    ModeSet s;
    s.bits_ = bits & 0b1111;
    return s;
  }

  /// Parses a comma separated list such as "car,bike". Throws
  /// InvalidArgument on unknown names.
  static ModeSet parse(std::string_view list);

  constexpr bool contains(TransportMode m) const noexcept {
    return (bits_ & bit(m)) != 0;
  }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(__builtin_popcount(bits_));
  }

  constexpr ModeSet operator&(ModeSet o) const noexcept {
    return fromBits(bits_ & o.bits_);
  }
  constexpr ModeSet operator|(ModeSet o) const noexcept {
    return fromBits(bits_ | o.bits_);
  }
  constexpr ModeSet& insert(TransportMode m) noexcept {
    bits_ |= bit(m);
    return *this;
  }
  constexpr ModeSet& erase(TransportMode m) noexcept {
    bits_ &= static_cast<std::uint8_t>(~bit(m));
    return *this;
  }

  /// The maximal mode under foot < bike < tram < car; nullopt when empty.
  constexpr std::optional<TransportMode> fastest() const noexcept {
    for (int i = static_cast<int>(kModeCount) - 1; i >= 0; --i) {
      if (bits_ & (1u << i)) return static_cast<TransportMode>(i);
    }
    return std::nullopt;
  }

  std::vector<TransportMode> modes() const;
  std::string toString() const;

  friend constexpr bool operator==(ModeSet, ModeSet) = default;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(bits_);
  }

 private:
  static constexpr std::uint8_t bit(TransportMode m) noexcept {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(m));
  }

  std::uint8_t bits_ = 0;
};

}  // namespace mmroute
