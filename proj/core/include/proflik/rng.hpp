#pragma once

#include <cstdint>
#include <random>

#include "proflik/specfun.hpp"

namespace proflik {

// Seeded random stream with cheap independent sub-streams, reproducible
// bit-for-bit across platforms: the engine is the standard-specified
// mt19937_64, uniforms come off a fixed 53-bit grid, and normals go through
// the inverse-CDF transform so no distribution object is involved.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  // Uniform on the open interval (0,1); never returns an endpoint.
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double standard_normal() { return specfun::normal_quantile(uniform01()); }

  // Independent stream derived from the same seed.
  RngStream substream(std::uint64_t k) const { return RngStream(seed_, stream_ * 0x10000 + k + 1); }

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace proflik
