#pragma once

// Counter-based splitmix64: value(i) = mix(seed + (i + 1) * 0x9E3779B97F4A7C15), where mix is
// the splitmix64 finalizer (shift 30, mul 0xBF58476D1CE4E5B9, shift 27, mul 0x94D049BB133111EB,
// shift 31). Any index can be produced independently, so a sweep split across workers draws the
// same stream regardless of how it is partitioned.

#include <cstdint>

namespace ffperm {

inline std::uint64_t splitmix64_mix(std::uint64_t z)
{
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i)
{
  return splitmix64_mix(seed + (i + 1) * 0x9E3779B97F4A7C15ull);
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t start = 0) : seed_(seed), i_(start) {}
  std::uint64_t next() { return splitmix64_at(seed_, i_++); }
  // Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n)
  {
    const std::uint64_t lim = ~0ull - (~0ull % n);
    for (;;) {
      const std::uint64_t v = next();
      if (v < lim)
        return v % n;
    }
  }
  std::uint64_t index() const { return i_; }

 private:
  std::uint64_t seed_, i_;
};

}  // namespace ffperm
