#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "fifosim/rng.hpp"
#include "fifosim/time.hpp"

namespace fifosim {

enum class LatencyKind : std::uint8_t { Constant, UniformJitter, Normal, Lognormal, Pareto };

/// Configurable one-way delay. Sampled delays are truncated at zero.
/// port_offsets adds a constant per sending endpoint, modelling switch-port
/// skew; a constant model with no offsets yields the same delay every sample.
struct LatencyModel {
  LatencyKind kind{LatencyKind::Constant};
  SimTime base{0};
  SimTime width{0};      // uniform_jitter: base + U[0, width)
  double mean_ns{0.0};   // normal
  double stddev_ns{0.0};
  double mu_log{0.0};    // lognormal: base + exp(N(mu, sigma)) ns
  double sigma_log{0.0};
  double scale_ns{0.0};  // pareto minimum
  double alpha{0.0};     // pareto shape
  std::map<std::string, SimTime, std::less<>> port_offsets;

  SimTime sample(RngStream& rng, std::string_view endpoint = {}) const;

  bool is_constant() const { return kind == LatencyKind::Constant; }

  static LatencyModel constant(SimTime base) {
    return LatencyModel{LatencyKind::Constant, base, {}, 0, 0, 0, 0, 0, 0, {}};
  }
  static LatencyModel uniform_jitter(SimTime base, SimTime width) {
    return LatencyModel{LatencyKind::UniformJitter, base, width, 0, 0, 0, 0, 0, 0, {}};
  }
};

}  // namespace fifosim
