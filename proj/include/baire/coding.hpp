#pragma once

#include <utility>

#include "baire/nat.hpp"
#include "baire/word.hpp"

namespace baire {

// ⟨n,k⟩ = (n+k)(n+k+1)/2 + k
inline Nat cantor_pair(const Nat& n, const Nat& k) {
  Nat s = n + k;
  return s * (s + 1) / 2 + k;
}

// Inverse of cantor_pair via the triangular root.
inline std::pair<Nat, Nat> cantor_unpair(const Nat& m) {
  // t = floor((sqrt(8m+1)-1)/2), largest t with t(t+1)/2 <= m
  Nat x = 8 * m + 1;
  Nat s;
  mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
  Nat t = (s - 1) / 2;
  while (t * (t + 1) / 2 > m) --t;
  while ((t + 1) * (t + 2) / 2 <= m) ++t;
  Nat k = m - t * (t + 1) / 2;
  Nat n = t - k;
  return {n, k};
}

// Bijective numbering w : N -> N* fixed by
//   word_decode(0)   = ε
//   word_decode(n+1) = word_decode(a) ⌢ b   where (a,b) = cantor_unpair(n).
inline Nat word_code(const Word& u) {
  Nat c = 0;
  for (const auto& d : u) c = cantor_pair(c, d) + 1;
  return c;
}

inline Word word_decode(Nat n) {
  Word rev;
  while (n != 0) {
    auto [a, b] = cantor_unpair(n - 1);
    rev.push_back(b);
    n = std::move(a);
  }
  return Word(rev.rbegin(), rev.rend());
}

// Length of word_decode(n) without materializing the word.
inline std::size_t word_decode_len(Nat n) {
  std::size_t len = 0;
  while (n != 0) {
    auto [a, b] = cantor_unpair(n - 1);
    (void)b;
    ++len;
    n = std::move(a);
  }
  return len;
}

}  // namespace baire
