#include "fifosim/latency.hpp"

#include <algorithm>
#include <cmath>

namespace fifosim {

SimTime LatencyModel::sample(RngStream& rng, std::string_view endpoint) const {
  std::int64_t delay = base.ns;
  switch (kind) {
    case LatencyKind::Constant:
      break;
    case LatencyKind::UniformJitter:
      if (width.ns > 0) delay += static_cast<std::int64_t>(rng.bounded(width.ns));
      break;
    case LatencyKind::Normal:
      delay += std::llround(rng.normal(mean_ns, stddev_ns));
      break;
    case LatencyKind::Lognormal:
      delay += std::llround(rng.lognormal(mu_log, sigma_log));
      break;
    case LatencyKind::Pareto:
      delay += std::llround(rng.pareto(scale_ns, alpha));
      break;
  }
  if (!endpoint.empty()) {
    auto it = port_offsets.find(endpoint);
    if (it != port_offsets.end()) delay += it->second.ns;
  }
  return SimTime{std::max<std::int64_t>(delay, 0)};
}

}  // namespace fifosim
