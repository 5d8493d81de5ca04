#pragma once

#include <cstdint>

#include "baire/word.hpp"

namespace baire {

// splitmix64: tiny, portable, deterministic across platforms. Traces must be
// byte-identical for a fixed seed, which std::uniform_int_distribution does
// not guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    // rejection to avoid modulo bias
    std::uint64_t lim = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    std::uint64_t v;
    do v = next();
    while (v >= lim);
    return v % bound;
  }

  // word of length in [0,maxLen] over alphabet {0..maxDigit}
  Word randomWord(std::uint64_t maxLen, std::uint64_t maxDigit) {
    std::uint64_t len = below(maxLen + 1);
    Word w;
    w.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) w.push_back(nat(below(maxDigit + 1)));
    return w;
  }

  Word randomWordNonempty(std::uint64_t maxLen, std::uint64_t maxDigit) {
    std::uint64_t len = 1 + below(maxLen);
    Word w;
    w.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) w.push_back(nat(below(maxDigit + 1)));
    return w;
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0xba17e5eedULL;

}  // namespace baire
