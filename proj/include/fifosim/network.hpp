#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fifosim/latency.hpp"
#include "fifosim/rng.hpp"
#include "fifosim/time.hpp"

namespace fifosim {

/// Order gateway. Transit time is one latency sample plus a linear penalty
/// per message already in flight, so a crowded gateway is slower than an
/// idle replica of itself.
class Gateway {
 public:
  Gateway(std::string id, LatencyModel latency, SimTime load_penalty)
      : id_(std::move(id)), latency_(std::move(latency)), load_penalty_(load_penalty) {}

  /// A message enters at t_send; returns its engine-side arrival time and
  /// counts the message as in flight. Call leave() when it arrives.
  SimTime enter(SimTime t_send, std::string_view endpoint, RngStream& rng) {
    const SimTime delay = latency_.sample(rng, endpoint);
    const SimTime penalty{load_penalty_.ns * in_flight_};
    ++in_flight_;
    return t_send + delay + penalty;
  }

  void leave() { --in_flight_; }

  int in_flight() const { return in_flight_; }
  const std::string& id() const { return id_; }
  const LatencyModel& latency() const { return latency_; }

 private:
  std::string id_;
  LatencyModel latency_;
  SimTime load_penalty_{0};
  int in_flight_{0};
};

/// Store-and-forward switch delay: the whole unit is buffered before it is
/// forwarded, so the delay scales with message size. Truncated messages are
/// smaller and therefore faster; validity is judged downstream.
SimTime switch_forward_delay(std::int64_t message_bytes, double link_rate_bytes_per_ns);

/// Point-to-point link (private fast links, inter-book routes). speedbump is
/// a constant added at the exchange-side ingress of the link.
struct Link {
  std::string id;
  LatencyModel latency;
  SimTime speedbump{0};

  SimTime traverse(SimTime t_send, RngStream& rng, std::string_view endpoint = {}) const {
    return t_send + latency.sample(rng, endpoint) + speedbump;
  }
};

}  // namespace fifosim
