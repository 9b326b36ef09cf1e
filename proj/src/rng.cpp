#include "conesum/rng.hpp"

#include <cmath>

namespace conesum {

namespace {

constexpr std::uint64_t kMul = 0xD2B74407B1CE6E93ull;
constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ull;

inline void mulHiLo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

// Philox-2x64-10 block: counter (c0, c1), key k.
inline void philox(std::uint64_t c0, std::uint64_t c1, std::uint64_t key,
                   std::uint64_t& out0, std::uint64_t& out1) {
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi, lo;
    mulHiLo(kMul, c0, hi, lo);
    c0 = hi ^ key ^ c1;
    c1 = lo;
    key += kWeyl;
  }
  out0 = c0;
  out1 = c1;
}

} // namespace

std::uint64_t RngStream::word(std::uint64_t i) const {
  std::uint64_t w0, w1;
  philox(i >> 1, id_, seed_, w0, w1);
  return (i & 1) ? w1 : w0;
}

double RngStream::uniformAt(std::uint64_t i) const {
  return (static_cast<double>(word(i) >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::gaussianAt(std::uint64_t i) const {
  const double u1 = uniformAt(2 * i);
  const double u2 = uniformAt(2 * i + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

double RngStream::nextGaussian() {
  const double u1 = uniformAt(cursor_++);
  const double u2 = uniformAt(cursor_++);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

std::uint64_t RngStream::nextBelow(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t w = word(cursor_++);
    if (w < limit) return w % bound;
  }
}

} // namespace conesum
