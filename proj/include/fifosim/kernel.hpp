#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fifosim/rng.hpp"
#include "fifosim/time.hpp"

namespace fifosim {

struct TraceRecord {
  SimTime at;
  std::uint64_t seq;
  std::string component;
  std::string action;
};

using EventTrace = std::vector<TraceRecord>;

/// Single-threaded discrete-event engine.
///
/// Events fire in strict (fire_at, seq) order. seq is assigned at scheduling
/// time, so ties at the same instant resolve by scheduling order, never by
/// chance; randomness enters the simulation only through named RngStreams.
class Kernel {
 public:
  explicit Kernel(std::uint64_t master_seed) : master_seed_(master_seed) {}

  SimTime now() const { return now_; }
  std::uint64_t master_seed() const { return master_seed_; }

  /// Enqueue an event. Scheduling in the past is a simulation bug and aborts
  /// the run with std::logic_error.
  std::uint64_t schedule(SimTime fire_at, std::string component, std::string action,
                         std::function<void()> fn);

  /// Process every event with fire_at <= t_stop, then advance the clock to
  /// t_stop. Returns the accumulated trace.
  const EventTrace& run_until(SimTime t_stop);

  const EventTrace& trace() const { return trace_; }
  std::size_t pending_events() const { return queue_.size(); }

  /// Per-component random stream, created on first use. Derivation depends
  /// only on (master seed, stream id), not on creation order.
  RngStream& rng(std::string_view stream_id);

 private:
  struct Event {
    SimTime fire_at;
    std::uint64_t seq;
    std::string component;
    std::string action;
    std::function<void()> fn;
  };

  // min-heap on (fire_at, seq)
  static bool fires_later(const Event& a, const Event& b);

  std::uint64_t master_seed_;
  SimTime now_{0};
  std::uint64_t next_seq_{0};
  std::vector<Event> queue_;
  EventTrace trace_;
  std::map<std::string, RngStream, std::less<>> streams_;
};

/// Newline-delimited debug export: time, seq, component, action.
void write_trace(std::ostream& os, const EventTrace& trace);

}  // namespace fifosim
