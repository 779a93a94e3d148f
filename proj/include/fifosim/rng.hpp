#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace fifosim {

std::uint64_t fnv1a64(std::string_view s);
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random stream derived from (master seed, stream id).
/// Every stochastic component owns its own stream, so one component's draw
/// count never perturbs another's sequence.
///
/// Distribution transforms are implemented here rather than with
/// std::*_distribution, whose outputs are not pinned by the standard.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::string_view stream_id);

  std::uint64_t next_u64();

  /// Uniform integer in [0, n), unbiased. n must be positive.
  std::uint64_t bounded(std::uint64_t n);

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01();

  double uniform(double lo, double hi);
  double normal(double mean, double stddev);
  double lognormal(double mu, double sigma);
  double pareto(double scale, double alpha);

  /// In-place Fisher–Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_{false};
  double spare_{0.0};
};

}  // namespace fifosim
