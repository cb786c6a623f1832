#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace hokt {

// Deterministic random source. mt19937_64 gives a platform-independent raw
// stream; the bounded/real draws below are implemented here instead of with
// std distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t r = (max % bound + 1) % bound;  // 2^64 mod bound
    std::uint64_t x = next_u64();
    if (r != 0) {
      while (x > max - r) x = next_u64();
    }
    return x % bound;
  }

  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(below(bound)); }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  // Fisher-Yates; std::shuffle's draw pattern is unspecified so we roll our own.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  // Derive a child seed from a base seed and a stream tag (e.g. a timestep).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(seed ^ splitmix64(tag));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hokt
