#ifndef PLEO_RNG_HPP
#define PLEO_RNG_HPP

#include <cstdint>
#include <random>

namespace pleo {

// SplitMix64 step: advances `state` and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state);

// Seed for substream `index` of a run seeded with `seed`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

// MT19937-64 with distribution code written out here, so streams do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng substream(std::uint64_t seed, std::uint64_t index) { return Rng(substream_seed(seed, index)); }

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.  Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [0, 1) with 53 bits.
  double uniform();
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pleo

#endif
