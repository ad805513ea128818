#ifndef AW_RNG_HPP
#define AW_RNG_HPP

#include <cstdint>
#include <string_view>

namespace aw {

// splitmix64: the documented, portable generator behind every randomized
// suite. Identical seeds give identical streams on every platform, which
// keeps law reports reproducible across runs and implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be positive. Rejection-free modulo is fine
  // at desk scale (bias < 2^-50 for the ranges used here).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }
  bool chance_in(int num, int den) { return below_int(den) < num; }
  bool coin() { return next() & 1u; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Derives an independent per-trial seed from a suite seed, a label and a
// trial index, so trials can run in any order with identical verdicts.
inline std::uint64_t split_seed(std::uint64_t seed, std::string_view label,
                                std::uint64_t index) {
  std::uint64_t h = seed ^ 0x6A09E667F3BCC909ull;
  for (char c : label) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001B3ull;
  }
  h ^= index + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  Rng mix(h);
  return mix.next();
}

}  // namespace aw

#endif
