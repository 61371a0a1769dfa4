#pragma once

#include <cstdint>

namespace polarmaps {

/// Seed used by the CLI when --seed is not given.
inline constexpr std::uint64_t kDefaultSeed = 20100401;

/// splitmix64 with rejection-sampled ranges; the stream is identical on
/// every platform and standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % range);
  }

  /// Independent stream for sub-task `index`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    SeededRng r(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
    return r.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace polarmaps
