#include <catch2/catch_amalgamated.hpp>

#include "baire/coding.hpp"

using namespace baire;

TEST_CASE("cantor pairing formula") {
  CHECK(cantor_pair(0, 0) == 0);
  CHECK(cantor_pair(0, 1) == 2);
  CHECK(cantor_pair(1, 0) == 1);
  auto [n, k] = cantor_unpair(5);
  CHECK(n == 0);
  CHECK(k == 2);
}

TEST_CASE("cantor pairing is a bijection below 10^4") {
  for (std::uint64_t m = 0; m < 10000; ++m) {
    auto [n, k] = cantor_unpair(nat(m));
    CHECK(cantor_pair(n, k) == nat(m));
  }
  // injectivity on a grid
  for (std::uint64_t n = 0; n < 50; ++n)
    for (std::uint64_t k = 0; k < 50; ++k) {
      auto [a, b] = cantor_unpair(cantor_pair(nat(n), nat(k)));
      CHECK(a == nat(n));
      CHECK(b == nat(k));
    }
}

TEST_CASE("word numbering basics") {
  CHECK(word_decode(0).empty());
  CHECK(word_decode(1) == word({0}));
  CHECK(word_code(Word{}) == 0);
  CHECK(word_code(word({0})) == 1);
}

TEST_CASE("word numbering is a bijection below 10^4") {
  for (std::uint64_t n = 0; n < 10000; ++n) {
    Word w = word_decode(nat(n));
    CHECK(word_code(w) == nat(n));
    CHECK(word_decode_len(nat(n)) == w.size());
  }
}

TEST_CASE("word codes survive large digits") {
  Word w{nat(0), pow2(100) + 7, nat(3)};
  CHECK(word_decode(word_code(w)) == w);
}
