#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace asmlab {

/// Seedable, splittable generator with platform-independent draws.
///
/// Streams are std::mt19937_64 seeded through SplitMix64; bounded integers use
/// rejection sampling and reals take the top 53 bits, so the sequence for a
/// seed does not depend on the standard library's distribution classes.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/splitmix64";

  explicit Rng(std::uint64_t seed) : engine_(splitmix(seed)) {}

  /// Independent child stream; `stream` distinguishes siblings.
  Rng split(std::uint64_t stream) {
    return Rng(splitmix(next() ^ splitmix(stream + 0x632BE59BD9B4E019ULL)));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform real in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace asmlab
