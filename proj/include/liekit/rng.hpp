#ifndef LIEKIT_RNG_HPP
#define LIEKIT_RNG_HPP

#include <cstdint>
#include <random>

namespace liekit {

// Deterministic random source. mt19937_64 output is pinned by the standard,
// and the bounded draw below avoids std distributions, whose sequences are
// implementation-defined. Reports must be byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform draw from [lo, hi], inclusive. Modulo reduction; the bias is
  // negligible for the small spans used here and keeps the stream stable.
  long uniform_int(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::mt19937_64 eng_;
};

// SplitMix64 step, used to derive independent per-trial seed streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace liekit

#endif
