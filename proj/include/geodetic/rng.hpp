#ifndef GEODETIC_RNG_HPP
#define GEODETIC_RNG_HPP

#include <cstdint>

namespace geodetic {

// Fixed, platform-independent pseudo-random generator (splitmix64).
// Generators must produce identical instances for identical seeds on
// every platform, so neither std:: engines' distributions nor rand()
// are used anywhere in this library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound) via multiply-shift rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  int next_int_below(int bound) {
    return static_cast<int>(next_below(static_cast<std::uint64_t>(bound)));
  }

  // 53-bit uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool next_bool() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace geodetic

#endif
