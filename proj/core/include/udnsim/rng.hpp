#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>

// Deterministic randomness layer. Every stochastic component draws from a
// RandomStream seeded through SeedMixer, so a (master_seed, grid cell,
// iteration) tuple always reproduces the same run, including across
// platforms: distribution shaping is done here by hand because the std::
// distribution templates are implementation-defined.

namespace udnsim {

// splitmix64 finalizer: a bijective avalanche over u64.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

// Folds a sequence of values into a seed. Each absorb step is a bijection of
// the state composed with an xor of the input, so for a fixed prefix two
// different next values can never collide, and absorption order matters.
class SeedMixer {
 public:
  explicit SeedMixer(std::uint64_t initial) : state_(mix64(initial + kGamma)) {}

  SeedMixer& absorb(std::uint64_t v) {
    state_ = mix64(state_ ^ (v + kGamma));
    return *this;
  }

  SeedMixer& absorb(double v) { return absorb(std::bit_cast<std::uint64_t>(v)); }

  std::uint64_t value() const { return state_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  std::uint64_t state_;
};

inline std::uint64_t derive_iteration_seed(std::uint64_t master_seed, std::uint64_t iteration) {
  return SeedMixer(master_seed).absorb(iteration).value();
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; the spare value is cached so draws cost one transform pair.
  double normal(double mean, double sigma) {
    if (has_spare_) {
      has_spare_ = false;
      return mean + sigma * spare_;
    }
    // 1 - u lies in (0, 1], keeping the log argument away from zero.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * kPi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return mean + sigma * r * std::cos(theta);
  }

  // Unit-mean exponential, used for Rayleigh fading power gains.
  double exponential1() {
    return -std::log(1.0 - uniform01());
  }

 private:
  static constexpr double kPi = 3.141592653589793238462643383279502884;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace udnsim
