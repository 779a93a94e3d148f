#pragma once

#include <compare>
#include <cstdint>

namespace fifosim {

/// Simulation clock value: integer nanoseconds since session start.
/// Also used for durations; all time arithmetic is exact.
struct SimTime {
  std::int64_t ns{0};

  friend constexpr auto operator<=>(SimTime, SimTime) = default;
};

constexpr SimTime operator+(SimTime a, SimTime b) { return SimTime{a.ns + b.ns}; }
constexpr SimTime operator-(SimTime a, SimTime b) { return SimTime{a.ns - b.ns}; }

constexpr SimTime& operator+=(SimTime& a, SimTime b) {
  a.ns += b.ns;
  return a;
}

constexpr SimTime nsec(std::int64_t v) { return SimTime{v}; }
constexpr SimTime usec(std::int64_t v) { return SimTime{v * 1'000}; }
constexpr SimTime msec(std::int64_t v) { return SimTime{v * 1'000'000}; }

}  // namespace fifosim
