#include "fifosim/kernel.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace fifosim {

bool Kernel::fires_later(const Event& a, const Event& b) {
  return std::tie(a.fire_at, a.seq) > std::tie(b.fire_at, b.seq);
}

std::uint64_t Kernel::schedule(SimTime fire_at, std::string component, std::string action,
                               std::function<void()> fn) {
  if (fire_at < now_) {
    throw std::logic_error("Kernel::schedule: event in the past (" + component + "/" + action +
                           " at " + std::to_string(fire_at.ns) + "ns, clock " +
                           std::to_string(now_.ns) + "ns)");
  }
  const std::uint64_t seq = next_seq_++;
  queue_.push_back(Event{fire_at, seq, std::move(component), std::move(action), std::move(fn)});
  std::push_heap(queue_.begin(), queue_.end(), fires_later);
  return seq;
}

const EventTrace& Kernel::run_until(SimTime t_stop) {
  while (!queue_.empty() && queue_.front().fire_at <= t_stop) {
    std::pop_heap(queue_.begin(), queue_.end(), fires_later);
    Event ev = std::move(queue_.back());
    queue_.pop_back();
    now_ = ev.fire_at;
    trace_.push_back(TraceRecord{ev.fire_at, ev.seq, ev.component, ev.action});
    if (ev.fn) ev.fn();
  }
  now_ = std::max(now_, t_stop);
  return trace_;
}

RngStream& Kernel::rng(std::string_view stream_id) {
  auto it = streams_.find(stream_id);
  if (it == streams_.end()) {
    it = streams_.emplace(std::string(stream_id), RngStream(master_seed_, stream_id)).first;
  }
  return it->second;
}

void write_trace(std::ostream& os, const EventTrace& trace) {
  for (const TraceRecord& r : trace) {
    os << r.at.ns << '\t' << r.seq << '\t' << r.component << '\t' << r.action << '\n';
  }
}

}  // namespace fifosim
