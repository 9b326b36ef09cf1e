#ifndef CONESUM_RNG_HPP
#define CONESUM_RNG_HPP

#include <cstdint>

namespace conesum {

// Counter-based random stream: the i-th output word of stream (seed, id) is
// a pure function of (seed, id, i), so sampling is reproducible regardless
// of thread scheduling. The generator is Philox-2x64 with 10 rounds, keyed
// by the seed, with the stream id in the upper counter word.
//
// Derived variates (documented for reproducibility; identical results are
// only promised within this implementation):
//   uniformAt(i): ((word(i) >> 11) + 1) * 2^-53, a double in (0, 1]
//   gaussianAt(i) consumes words 2i and 2i+1 via the Box-Muller transform
//   and returns sqrt(-2 ln u1) * cos(2 pi u2).
// The stateful next*() helpers advance a cursor over the *word* index space;
// nextGaussian() consumes two words.
class RngStream {
public:
  RngStream(std::uint64_t seed, std::uint64_t streamId)
      : seed_(seed), id_(streamId) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t streamId() const { return id_; }

  std::uint64_t word(std::uint64_t i) const;
  double uniformAt(std::uint64_t i) const;
  double gaussianAt(std::uint64_t i) const;

  double nextUniform() { return uniformAt(cursor_++); }
  double nextGaussian();
  // Unbiased uniform draw from {0, ..., bound-1} by rejection.
  std::uint64_t nextBelow(std::uint64_t bound);

private:
  std::uint64_t seed_;
  std::uint64_t id_;
  std::uint64_t cursor_ = 0;
};

} // namespace conesum

#endif
