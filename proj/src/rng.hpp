#pragma once

#include <cstdint>
#include <random>

namespace hypercover {

// Per-sample deterministic randomness. Sample i of a run is generated from an
// engine seeded by hash(master_seed, i), so a sample's bytes depend only on
// (seed, index) — never on which thread produced it or how many samples came
// before. That is what makes prefetching with any worker count bit-identical
// to the single-threaded stream.
//
// std::uniform_int_distribution / uniform_real_distribution are not pinned
// down by the standard, so draws are hand-rolled on top of mt19937_64 (whose
// output sequence *is* pinned down).

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SampleRng {
 public:
  SampleRng(uint64_t master_seed, uint64_t sample_index) {
    uint64_t s = master_seed ^ 0x6a09e667f3bcc908ULL;
    (void)splitmix64(s);
    s ^= sample_index * 0x2545f4914f6cdd1dULL + 0x9e3779b97f4a7c15ULL;
    const uint64_t w0 = splitmix64(s);
    const uint64_t w1 = splitmix64(s);
    std::seed_seq seq{static_cast<uint32_t>(w0), static_cast<uint32_t>(w0 >> 32),
                      static_cast<uint32_t>(w1), static_cast<uint32_t>(w1 >> 32)};
    eng_.seed(seq);
  }

  uint64_t bits() { return eng_(); }

  // uniform in [0, bound); bound >= 1
  uint64_t below(uint64_t bound) {
    // rejection sampling over the top of the 64-bit range; unbiased
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  // uniform in [0, 1) with 53 random bits
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hypercover
