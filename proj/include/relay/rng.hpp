#ifndef RELAY_RNG_HPP
#define RELAY_RNG_HPP

#include <cstdint>

namespace relay {

// SplitMix64 stream generator. Output i of a stream is a pure function of
// (seed, stream key, i), so replications and driver/policy streams are
// independent and replayable from their keys alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  // Derives a stream keyed by (seed, a, b), e.g. (experiment seed,
  // replication index, driver-vs-policy tag).
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t a,
                           std::uint64_t b = 0) {
    return SplitMix64(finalize(finalize(finalize(seed) + a) + b));
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return finalize(state_);
  }

  // Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace relay

#endif  // RELAY_RNG_HPP
