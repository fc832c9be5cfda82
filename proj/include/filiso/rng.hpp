#pragma once

#include <cstdint>

namespace filiso {

// xoshiro256** seeded through splitmix64; hand-rolled so that campaign
// output is identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);          // uniform in [0, n)
  long range(long lo, long hi);                  // uniform in [lo, hi]
  bool chance(std::uint64_t num, std::uint64_t den);

  // Independent stream for trial k of a campaign.
  Rng fork(std::uint64_t stream) const;

 private:
  std::uint64_t s_[4];
  std::uint64_t seed_;
};

}  // namespace filiso
