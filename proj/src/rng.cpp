#include "fifosim/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fifosim {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::string_view stream_id)
    : engine_(splitmix64(splitmix64(master_seed) ^ fnv1a64(stream_id))) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

std::uint64_t RngStream::bounded(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("RngStream::bounded: n must be positive");
  const std::uint64_t threshold = (0 - n) % n;  // rejection zone for unbiased modulo
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double RngStream::normal(double mean, double stddev) {
  if (have_spare_) {
    have_spare_ = false;
    return mean + stddev * spare_;
  }
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps log() finite
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return mean + stddev * radius * std::cos(angle);
}

double RngStream::lognormal(double mu, double sigma) { return std::exp(normal(mu, sigma)); }

double RngStream::pareto(double scale, double alpha) {
  return scale / std::pow(1.0 - uniform01(), 1.0 / alpha);
}

}  // namespace fifosim
